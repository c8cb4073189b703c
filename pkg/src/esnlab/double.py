"""Double semigroups, the middle-four interchange law, and double inductive
groupoids with the complete compatibility-axiom checker.

A double inductive groupoid keeps four separate indexed carriers (objects,
vertical arrows, horizontal arrows, cells) with explicit identity-cell
embeddings, instead of identifying everything the way the algebra allows. Cells
carry two groupoid structures: the horizontal one is a groupoid over the
vertical arrows (composition ``hcompose``, order ``leq``), the vertical one a
groupoid over the horizontal arrows (``vcompose``, ``lesssim``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EsnlabError,
    InvalidDigError,
    NotDoubleInverseError,
    TheoremViolation,
)
from .esn import InductiveGroupoid, validate_ig
from .inverse import analyze_inverse
from .report import ValidationReport, Verdict
from .tables import CayleyTable, is_associative, is_commutative


@dataclass(frozen=True)
class DoubleSemigroup:
    hop: CayleyTable  # horizontal operation
    vop: CayleyTable  # vertical operation

    def __post_init__(self):
        if self.hop.n != self.vop.n:
            raise ValueError("the two operations must share one carrier")

    @property
    def n(self):
        return self.hop.n


def check_interchange(hop: CayleyTable, vop: CayleyTable) -> Verdict:
    """(a v b) h (c v d) = (a h c) v (b h d) over all quadruples; least witness."""
    h = hop.rows
    v = vop.rows
    n = hop.n
    for a in range(n):
        for b in range(n):
            ab = v[a][b]
            for c in range(n):
                ac = h[a][c]
                for d in range(n):
                    if h[ab - 1][v[c][d] - 1] != v[ac - 1][h[b][d] - 1]:
                        return Verdict(False, (a + 1, b + 1, c + 1, d + 1))
    return Verdict(True)


@dataclass(frozen=True)
class DoubleClassification:
    hop_associative: Verdict
    vop_associative: Verdict
    interchange: Verdict
    hop_inverse_failure: str | None
    vop_inverse_failure: str | None

    @property
    def is_double_semigroup(self):
        return bool(self.hop_associative and self.vop_associative and self.interchange)

    @property
    def is_double_inverse_semigroup(self):
        return (
            self.is_double_semigroup
            and self.hop_inverse_failure is None
            and self.vop_inverse_failure is None
        )

    def failure_reason(self):
        if not self.hop_associative:
            return f"hop not associative at {self.hop_associative.witness}"
        if not self.vop_associative:
            return f"vop not associative at {self.vop_associative.witness}"
        if not self.interchange:
            return f"interchange fails at {self.interchange.witness}"
        if self.hop_inverse_failure:
            return f"hop: {self.hop_inverse_failure}"
        if self.vop_inverse_failure:
            return f"vop: {self.vop_inverse_failure}"
        return None

    def as_json(self):
        return {
            "hop_associative": self.hop_associative.as_json(),
            "vop_associative": self.vop_associative.as_json(),
            "interchange": self.interchange.as_json(),
            "hop_inverse_failure": self.hop_inverse_failure,
            "vop_inverse_failure": self.vop_inverse_failure,
            "is_double_semigroup": self.is_double_semigroup,
            "is_double_inverse_semigroup": self.is_double_inverse_semigroup,
        }


def classify_double(hop: CayleyTable, vop: CayleyTable) -> DoubleClassification:
    def inverse_failure(t):
        try:
            analyze_inverse(t)
            return None
        except EsnlabError as exc:  # not associative / no or non-unique inverse
            return str(exc)

    return DoubleClassification(
        hop_associative=is_associative(hop),
        vop_associative=is_associative(vop),
        interchange=check_interchange(hop, vop),
        hop_inverse_failure=inverse_failure(hop),
        vop_inverse_failure=inverse_failure(vop),
    )


def is_double_semigroup(d: DoubleSemigroup) -> bool:
    return classify_double(d.hop, d.vop).is_double_semigroup


def is_double_inverse_semigroup(d: DoubleSemigroup) -> bool:
    return classify_double(d.hop, d.vop).is_double_inverse_semigroup


def is_proper(d: DoubleSemigroup) -> Verdict:
    """Proper iff the two operations differ somewhere; witness = least such pair."""
    for a in d.hop.elements():
        for b in d.hop.elements():
            if d.hop.product(a, b) != d.vop.product(a, b):
                return Verdict(True, (a, b))
    return Verdict(False)


def commutativity_report(d: DoubleSemigroup) -> dict:
    """Both operations of a double inverse semigroup must commute; a failure here
    is a theorem violation, not a property of the input."""
    cls = classify_double(d.hop, d.vop)
    if not cls.is_double_inverse_semigroup:
        raise NotDoubleInverseError(cls.failure_reason())
    hc = is_commutative(d.hop)
    vc = is_commutative(d.vop)
    if not (hc and vc):
        raise TheoremViolation(
            f"double inverse semigroup with a non-commutative operation, witness "
            f"{(hc or vc).witness}"
        )
    return {"hop_commutative": True, "vop_commutative": True}


@dataclass(frozen=True)
class DoubleInductiveGroupoid:
    objects: tuple[int, ...]
    ver_arrows: tuple[int, ...]
    hor_arrows: tuple[int, ...]
    cells: tuple[int, ...]
    obj_ver: dict  # object -> identity vertical arrow
    obj_hor: dict  # object -> identity horizontal arrow
    ver_cell: dict  # vertical arrow -> identity cell for hcompose
    hor_cell: dict  # horizontal arrow -> identity cell for vcompose
    ver_src: dict  # vertical arrow -> top object
    ver_dst: dict  # vertical arrow -> bottom object
    hor_src: dict  # horizontal arrow -> left object
    hor_dst: dict  # horizontal arrow -> right object
    hdom: dict  # cell -> vertical arrow (left edge)
    hcod: dict  # cell -> vertical arrow (right edge)
    vdom: dict  # cell -> horizontal arrow (top edge)
    vcod: dict  # cell -> horizontal arrow (bottom edge)
    hcompose: dict  # (cell, cell) -> cell, defined iff hcod = hdom
    vcompose: dict  # (cell, cell) -> cell, defined iff vcod = vdom
    hinv: dict
    vinv: dict
    leq: frozenset  # horizontal order on cells
    lesssim: frozenset  # vertical order on cells
    meet_h: dict  # (ver, ver) -> ver
    meet_v: dict  # (hor, hor) -> hor
    h_restrict: dict  # (ver e, cell a) -> cell, for e <= hdom a
    h_corestrict: dict  # (cell a, ver e) -> cell, for e <= hcod a
    v_restrict: dict  # (hor e, cell a) -> cell, for e <~ vdom a
    v_corestrict: dict  # (cell a, hor e) -> cell, for e <~ vcod a

    def obj_cell(self, o):
        return self.ver_cell[self.obj_ver[o]]


class _Eval:
    """Definedness-guarded expression evaluation over one groupoid.

    Every value is a cell id or None; vertical/horizontal arrows and objects
    enter through their identity-cell embeddings, and operations that need an
    arrow quietly return None when a cell is not an embedded arrow.
    """

    def __init__(self, g: DoubleInductiveGroupoid):
        self.g = g
        self.cell_ver = {g.ver_cell[e]: e for e in g.ver_arrows}
        self.cell_hor = {g.hor_cell[f]: f for f in g.hor_arrows}
        self.ver_cells = tuple(sorted(g.ver_cell[e] for e in g.ver_arrows))
        self.hor_cells = tuple(sorted(g.hor_cell[f] for f in g.hor_arrows))
        self.obj_cells = tuple(sorted(g.obj_cell(o) for o in g.objects))

    def hdom(self, a):
        return None if a is None else self.g.ver_cell[self.g.hdom[a]]

    def hcod(self, a):
        return None if a is None else self.g.ver_cell[self.g.hcod[a]]

    def vdom(self, a):
        return None if a is None else self.g.hor_cell[self.g.vdom[a]]

    def vcod(self, a):
        return None if a is None else self.g.hor_cell[self.g.vcod[a]]

    def hcomp(self, a, b):
        if a is None or b is None:
            return None
        return self.g.hcompose.get((a, b))

    def vcomp(self, a, b):
        if a is None or b is None:
            return None
        return self.g.vcompose.get((a, b))

    def meet_h(self, a, b):
        e = self.cell_ver.get(a)
        f = self.cell_ver.get(b)
        if e is None or f is None:
            return None
        m = self.g.meet_h.get((e, f))
        return None if m is None else self.g.ver_cell[m]

    def meet_v(self, a, b):
        e = self.cell_hor.get(a)
        f = self.cell_hor.get(b)
        if e is None or f is None:
            return None
        m = self.g.meet_v.get((e, f))
        return None if m is None else self.g.hor_cell[m]

    def hrestrict(self, e_cell, a):
        e = self.cell_ver.get(e_cell)
        if e is None or a is None:
            return None
        return self.g.h_restrict.get((e, a))

    def hcorestrict(self, a, e_cell):
        e = self.cell_ver.get(e_cell)
        if e is None or a is None:
            return None
        return self.g.h_corestrict.get((a, e))

    def vrestrict(self, e_cell, a):
        e = self.cell_hor.get(e_cell)
        if e is None or a is None:
            return None
        return self.g.v_restrict.get((e, a))

    def vcorestrict(self, a, e_cell):
        e = self.cell_hor.get(e_cell)
        if e is None or a is None:
            return None
        return self.g.v_corestrict.get((a, e))

    def hprod(self, a, b):
        """The total horizontal pseudo-product rebuilt from the groupoid data."""
        u = self.meet_h(self.hcod(a), self.hdom(b))
        return self.hcomp(self.hcorestrict(a, u), self.hrestrict(u, b))

    def vprod(self, a, b):
        u = self.meet_v(self.vcod(a), self.vdom(b))
        return self.vcomp(self.vcorestrict(a, u), self.vrestrict(u, b))


def _horizontal_view(g: DoubleInductiveGroupoid) -> InductiveGroupoid:
    """The groupoid over the vertical arrows, transported to cell ids."""
    vc = g.ver_cell
    objects = tuple(sorted(vc[e] for e in g.ver_arrows))
    return InductiveGroupoid(
        objects=objects,
        arrows=g.cells,
        dom={a: vc[g.hdom[a]] for a in g.cells},
        cod={a: vc[g.hcod[a]] for a in g.cells},
        compose=dict(g.hcompose),
        inv=dict(g.hinv),
        identity={o: o for o in objects},
        leq=g.leq,
        object_meet={
            (vc[e], vc[f]): vc[m] for (e, f), m in g.meet_h.items()
        },
        restriction={(vc[e], a): b for (e, a), b in g.h_restrict.items()},
        corestriction={(a, vc[e]): b for (a, e), b in g.h_corestrict.items()},
    )


def _vertical_view(g: DoubleInductiveGroupoid) -> InductiveGroupoid:
    hc = g.hor_cell
    objects = tuple(sorted(hc[f] for f in g.hor_arrows))
    return InductiveGroupoid(
        objects=objects,
        arrows=g.cells,
        dom={a: hc[g.vdom[a]] for a in g.cells},
        cod={a: hc[g.vcod[a]] for a in g.cells},
        compose=dict(g.vcompose),
        inv=dict(g.vinv),
        identity={o: o for o in objects},
        leq=g.lesssim,
        object_meet={
            (hc[e], hc[f]): hc[m] for (e, f), m in g.meet_v.items()
        },
        restriction={(hc[e], a): b for (e, a), b in g.v_restrict.items()},
        corestriction={(a, hc[e]): b for (a, e), b in g.v_corestrict.items()},
    )


def _check_embeddings(g: DoubleInductiveGroupoid, rep: ValidationReport) -> bool:
    cells = set(g.cells)
    ok = True
    for name, mapping, domain, codomain in (
        ("obj_ver", g.obj_ver, g.objects, set(g.ver_arrows)),
        ("obj_hor", g.obj_hor, g.objects, set(g.hor_arrows)),
        ("ver_cell", g.ver_cell, g.ver_arrows, cells),
        ("hor_cell", g.hor_cell, g.hor_arrows, cells),
    ):
        seen = set()
        for x in domain:
            y = mapping.get(x)
            if y not in codomain:
                rep.add(f"emb.{name}", (x,), "embedding leaves its codomain")
                ok = False
            elif y in seen:
                rep.add(f"emb.{name}", (x,), "embedding not injective")
                ok = False
            seen.add(y)
    if not ok:
        return False
    for e in g.ver_arrows:
        c = g.ver_cell[e]
        if g.hdom.get(c) != e or g.hcod.get(c) != e:
            rep.add("emb.ver-identity", (e,), "identity cell must be a horizontal loop")
            ok = False
    for f in g.hor_arrows:
        c = g.hor_cell[f]
        if g.vdom.get(c) != f or g.vcod.get(c) != f:
            rep.add("emb.hor-identity", (f,), "identity cell must be a vertical loop")
            ok = False
    for o in g.objects:
        if g.ver_cell[g.obj_ver[o]] != g.hor_cell[g.obj_hor[o]]:
            rep.add("emb.object-cell", (o,), "the two identity cells of an object differ")
            ok = False
        if g.ver_src.get(g.obj_ver[o]) != o or g.ver_dst.get(g.obj_ver[o]) != o:
            rep.add("emb.object-ver-loop", (o,))
            ok = False
        if g.hor_src.get(g.obj_hor[o]) != o or g.hor_dst.get(g.obj_hor[o]) != o:
            rep.add("emb.object-hor-loop", (o,))
            ok = False
    objset = set(g.objects)
    for e in g.ver_arrows:
        if g.ver_src.get(e) not in objset or g.ver_dst.get(e) not in objset:
            rep.add("emb.ver-endpoints", (e,))
            ok = False
    for f in g.hor_arrows:
        if g.hor_src.get(f) not in objset or g.hor_dst.get(f) not in objset:
            rep.add("emb.hor-endpoints", (f,))
            ok = False
    verset = set(g.ver_arrows)
    horset = set(g.hor_arrows)
    for a in g.cells:
        if g.hdom.get(a) not in verset or g.hcod.get(a) not in verset:
            rep.add("emb.cell-hboundary", (a,))
            ok = False
        if g.vdom.get(a) not in horset or g.vcod.get(a) not in horset:
            rep.add("emb.cell-vboundary", (a,))
            ok = False
    return ok


def _check_boundaries(g: DoubleInductiveGroupoid, ev: _Eval, rep: ValidationReport):
    for a in g.cells:
        l, r = g.hdom[a], g.hcod[a]
        t, b = g.vdom[a], g.vcod[a]
        corners = (
            (g.ver_src[l], g.hor_src[t]),
            (g.ver_src[r], g.hor_dst[t]),
            (g.ver_dst[l], g.hor_src[b]),
            (g.ver_dst[r], g.hor_dst[b]),
        )
        for idx, (via_edge, via_other) in enumerate(corners):
            if via_edge != via_other:
                rep.add("boundary.corner", (a, idx), "edge endpoints disagree at a corner")
    # transverse edges of composites: the top edge of a horizontal composite is
    # the horizontal composite of the top edges, and dually everywhere else
    for (a, b), c in g.hcompose.items():
        for tag, edge in (("boundary.hcomp-vdom", ev.vdom), ("boundary.hcomp-vcod", ev.vcod)):
            lhs = ev.hcomp(edge(a), edge(b))
            rep.bump(tag, True)
            if lhs != edge(c):
                rep.add(tag, (a, b), "undefined" if lhs is None else "")
    for (a, b), c in g.vcompose.items():
        for tag, edge in (("boundary.vcomp-hdom", ev.hdom), ("boundary.vcomp-hcod", ev.hcod)):
            lhs = ev.vcomp(edge(a), edge(b))
            rep.bump(tag, True)
            if lhs != edge(c):
                rep.add(tag, (a, b), "undefined" if lhs is None else "")
    # identity-cell families are closed under the transverse composition
    for x in ev.ver_cells:
        for y in ev.ver_cells:
            c = ev.vcomp(x, y)
            if c is not None and c not in ev.cell_ver:
                rep.add("boundary.ver-closed", (x, y))
    for x in ev.hor_cells:
        for y in ev.hor_cells:
            c = ev.hcomp(x, y)
            if c is not None and c not in ev.cell_hor:
                rep.add("boundary.hor-closed", (x, y))


def _check_cell_interchange(g: DoubleInductiveGroupoid, ev: _Eval, rep: ValidationReport):
    cells = g.cells
    for a in cells:
        for b in cells:
            ab = ev.hcomp(a, b)
            if ab is None:
                continue
            for c in cells:
                ac = ev.vcomp(a, c)
                if ac is None:
                    continue
                for d in cells:
                    cd = ev.hcomp(c, d)
                    bd = ev.vcomp(b, d)
                    if cd is None or bd is None:
                        continue
                    lhs = ev.vcomp(ab, cd)
                    rhs = ev.hcomp(ac, bd)
                    rep.bump("interchange.cells", True)
                    if lhs is None or rhs is None or lhs != rhs:
                        rep.add("interchange.cells", (a, b, c, d))


def _guarded(rep, tag, lhs, rhs, witness=()):
    if lhs is None or rhs is None:
        rep.bump(tag, False)
    else:
        rep.bump(tag, True)
        if lhs != rhs:
            rep.add(tag, witness)


def _check_axiom_families(g, ev: _Eval, rep: ValidationReport, strict_ix: bool):
    cells = g.cells
    vcs = ev.ver_cells
    hcs = ev.hor_cells
    ocs = ev.obj_cells

    # (iii) composition against (co)restriction in the transverse direction
    for a in cells:
        for b in cells:
            for f in vcs:
                for gg in vcs:
                    ab = ev.vcomp(a, b)
                    fg = ev.vcomp(f, gg)
                    lhs = ev.hcorestrict(ab, fg)
                    rhs = ev.vcomp(ev.hcorestrict(a, f), ev.hcorestrict(b, gg))
                    if lhs is None or rhs is None:
                        rep.bump("iii.a", False)
                    else:
                        rep.bump("iii.a", True)
                        if lhs != rhs:
                            rep.add("iii.a", (a, b, f, gg))
                    lhs = ev.hrestrict(fg, ab)
                    rhs = ev.vcomp(ev.hrestrict(f, a), ev.hrestrict(gg, b))
                    if lhs is None or rhs is None:
                        rep.bump("iii.c", False)
                    else:
                        rep.bump("iii.c", True)
                        if lhs != rhs:
                            rep.add("iii.c", (f, gg, a, b))
            for f in hcs:
                for gg in hcs:
                    ab = ev.hcomp(a, b)
                    fg = ev.hcomp(f, gg)
                    lhs = ev.vcorestrict(ab, fg)
                    rhs = ev.hcomp(ev.vcorestrict(a, f), ev.vcorestrict(b, gg))
                    if lhs is None or rhs is None:
                        rep.bump("iii.b", False)
                    else:
                        rep.bump("iii.b", True)
                        if lhs != rhs:
                            rep.add("iii.b", (a, b, f, gg))
                    lhs = ev.vrestrict(fg, ab)
                    rhs = ev.hcomp(ev.vrestrict(f, a), ev.vrestrict(gg, b))
                    if lhs is None or rhs is None:
                        rep.bump("iii.d", False)
                    else:
                        rep.bump("iii.d", True)
                        if lhs != rhs:
                            rep.add("iii.d", (f, gg, a, b))

    # (iv) composition against the transverse meet
    for e in hcs:
        for f in hcs:
            for gg in hcs:
                for h in hcs:
                    lhs = ev.hcomp(ev.meet_v(e, f), ev.meet_v(gg, h))
                    rhs = ev.meet_v(ev.hcomp(e, gg), ev.hcomp(f, h))
                    if lhs is None or rhs is None:
                        rep.bump("iv.a", False)
                    else:
                        rep.bump("iv.a", True)
                        if lhs != rhs:
                            rep.add("iv.a", (e, f, gg, h))
    for e in vcs:
        for f in vcs:
            for gg in vcs:
                for h in vcs:
                    lhs = ev.vcomp(ev.meet_h(e, f), ev.meet_h(gg, h))
                    rhs = ev.meet_h(ev.vcomp(e, gg), ev.vcomp(f, h))
                    if lhs is None or rhs is None:
                        rep.bump("iv.b", False)
                    else:
                        rep.bump("iv.b", True)
                        if lhs != rhs:
                            rep.add("iv.b", (e, f, gg, h))

    # (v) meet against (co)restriction in the transverse direction
    for f in ocs:
        for h in ocs:
            for e in hcs:
                for gg in hcs:
                    lhs = ev.meet_v(ev.hcorestrict(e, f), ev.hcorestrict(gg, h))
                    rhs = ev.hcorestrict(ev.meet_v(e, gg), ev.meet_v(f, h))
                    if lhs is None or rhs is None:
                        rep.bump("v.a", False)
                    else:
                        rep.bump("v.a", True)
                        if lhs != rhs:
                            rep.add("v.a", (e, f, gg, h))
                    lhs = ev.meet_v(ev.hrestrict(f, e), ev.hrestrict(h, gg))
                    rhs = ev.hrestrict(ev.meet_v(f, h), ev.meet_v(e, gg))
                    if lhs is None or rhs is None:
                        rep.bump("v.c", False)
                    else:
                        rep.bump("v.c", True)
                        if lhs != rhs:
                            rep.add("v.c", (f, e, h, gg))
            for e in vcs:
                for gg in vcs:
                    lhs = ev.meet_h(ev.vcorestrict(e, f), ev.vcorestrict(gg, h))
                    rhs = ev.vcorestrict(ev.meet_h(e, gg), ev.meet_h(f, h))
                    if lhs is None or rhs is None:
                        rep.bump("v.b", False)
                    else:
                        rep.bump("v.b", True)
                        if lhs != rhs:
                            rep.add("v.b", (e, f, gg, h))
                    lhs = ev.meet_h(ev.vrestrict(f, e), ev.vrestrict(h, gg))
                    rhs = ev.vrestrict(ev.meet_h(f, h), ev.meet_h(e, gg))
                    if lhs is None or rhs is None:
                        rep.bump("v.d", False)
                    else:
                        rep.bump("v.d", True)
                        if lhs != rhs:
                            rep.add("v.d", (f, e, h, gg))

    # (vi) the two (co)restriction families against each other
    for a in cells:
        for f in hcs:
            for gg in vcs:
                x = ev.meet_h(ev.hcod(f), ev.vcod(gg))
                lhs = ev.hcorestrict(ev.vcorestrict(a, f), ev.vcorestrict(gg, x))
                rhs = ev.vcorestrict(ev.hcorestrict(a, gg), ev.hcorestrict(f, x))
                for tag in ("vi.a", "vi.b"):
                    if lhs is None or rhs is None:
                        rep.bump(tag, False)
                    else:
                        rep.bump(tag, True)
                        if lhs != rhs:
                            rep.add(tag, (a, f, gg))
                x = ev.meet_h(ev.hdom(f), ev.vdom(gg))
                lhs = ev.hrestrict(ev.vrestrict(x, gg), ev.vrestrict(f, a))
                rhs = ev.vrestrict(ev.hrestrict(x, f), ev.hrestrict(gg, a))
                for tag in ("vi.c", "vi.d"):
                    if lhs is None or rhs is None:
                        rep.bump(tag, False)
                    else:
                        rep.bump(tag, True)
                        if lhs != rhs:
                            rep.add(tag, (a, f, gg))

    # (vii) the two meets against each other
    for e in ocs:
        for f in ocs:
            for gg in ocs:
                for h in ocs:
                    lhs = ev.meet_v(ev.meet_h(e, f), ev.meet_h(gg, h))
                    rhs = ev.meet_h(ev.meet_v(e, gg), ev.meet_v(f, h))
                    if lhs is None or rhs is None:
                        rep.bump("vii", False)
                    else:
                        rep.bump("vii", True)
                        if lhs != rhs:
                            rep.add("vii", (e, f, gg, h))

    # (viii) (co)domains are functorial for the transverse meet
    for e in vcs:
        for f in vcs:
            _guarded(rep, "viii.a", ev.vdom(ev.meet_h(e, f)),
                     ev.meet_h(ev.vdom(e), ev.vdom(f)), (e, f))
            _guarded(rep, "viii.b", ev.vcod(ev.meet_h(e, f)),
                     ev.meet_h(ev.vcod(e), ev.vcod(f)), (e, f))
    for e in hcs:
        for f in hcs:
            _guarded(rep, "viii.c", ev.hdom(ev.meet_v(e, f)),
                     ev.meet_v(ev.hdom(e), ev.hdom(f)), (e, f))
            _guarded(rep, "viii.d", ev.hcod(ev.meet_v(e, f)),
                     ev.meet_v(ev.hcod(e), ev.hcod(f)), (e, f))

    # (ix) (co)domains are functorial for the transverse (co)restrictions
    for a in cells:
        for ec in vcs:
            _guarded(rep, "ix.a", ev.vdom(ev.hcorestrict(a, ec)),
                     ev.hcorestrict(ev.vdom(a), ev.vdom(ec)), (a, ec))
            _guarded(rep, "ix.b", ev.vcod(ev.hcorestrict(a, ec)),
                     ev.hcorestrict(ev.vcod(a), ev.vcod(ec)), (a, ec))
            _guarded(rep, "ix.c", ev.vdom(ev.hrestrict(ec, a)),
                     ev.hrestrict(ev.vdom(ec), ev.vdom(a)), (ec, a))
            _guarded(rep, "ix.d", ev.vcod(ev.hrestrict(ec, a)),
                     ev.hrestrict(ev.vcod(ec), ev.vcod(a)), (ec, a))
        for ec in hcs:
            _guarded(rep, "ix.e", ev.hdom(ev.vcorestrict(a, ec)),
                     ev.vcorestrict(ev.hdom(a), ev.hdom(ec)), (a, ec))
            _guarded(rep, "ix.f", ev.hcod(ev.vcorestrict(a, ec)),
                     ev.vcorestrict(ev.hcod(a), ev.hcod(ec)), (a, ec))
            # (ix.g) as printed restricts by the *vertical* domain of e; the
            # pattern of (e), (f), (h) suggests the horizontal one instead.
            lhs = ev.hdom(ev.vrestrict(ec, a))
            literal = ev.vrestrict(ev.vdom(ec), ev.hdom(a))
            _guarded(rep, "ix.g", lhs, literal, (ec, a))
            if strict_ix:
                patterned = ev.vrestrict(ev.hdom(ec), ev.hdom(a))
                _guarded(rep, "ix.g-strict", lhs, patterned, (ec, a))
                if literal is not None and patterned is not None and literal != patterned:
                    rep.notes.append(
                        f"ix.g readings disagree at cell {a}, horizontal arrow cell {ec}"
                    )
            _guarded(rep, "ix.h", ev.hcod(ev.vrestrict(ec, a)),
                     ev.vrestrict(ev.hcod(ec), ev.hcod(a)), (ec, a))


def validate_dig(g: DoubleInductiveGroupoid, strict_ix=False) -> ValidationReport:
    """Embeddings, both inductive-groupoid substructures, boundary coherence,
    cell-level interchange, and the full compatibility-axiom sweep."""
    rep = ValidationReport()
    if g.cells != tuple(range(1, len(g.cells) + 1)):
        rep.add("shape.cells", (), "cells must be 1..m in order")
        return rep
    if not _check_embeddings(g, rep):
        return rep
    ev = _Eval(g)
    rep.merge(validate_ig(_horizontal_view(g)), prefix="i.")
    rep.merge(validate_ig(_vertical_view(g)), prefix="ii.")
    _check_boundaries(g, ev, rep)
    _check_cell_interchange(g, ev, rep)
    _check_axiom_families(g, ev, rep, strict_ix)
    return rep


def dig_from_dis(d: DoubleSemigroup, check=True) -> DoubleInductiveGroupoid:
    """Objects are the shared idempotents, vertical arrows the hop-idempotents,
    horizontal arrows the vop-idempotents, cells the elements; boundaries,
    orders, meets and (co)restrictions all come from the two products."""
    cls = classify_double(d.hop, d.vop)
    if not cls.is_double_inverse_semigroup:
        raise NotDoubleInverseError(cls.failure_reason())
    hop, vop = d.hop, d.vop
    ah = analyze_inverse(hop)
    av = analyze_inverse(vop)
    ver_elems = ah.idempotent_set
    hor_elems = av.idempotent_set
    obj_elems = tuple(sorted(set(ver_elems) & set(hor_elems)))
    if not obj_elems:
        raise TheoremViolation("the idempotent sets of a double inverse semigroup intersect")
    ver_ids = {x: i + 1 for i, x in enumerate(ver_elems)}
    hor_ids = {x: i + 1 for i, x in enumerate(hor_elems)}
    obj_ids = {x: i + 1 for i, x in enumerate(obj_elems)}
    cells = tuple(hop.elements())

    def require_obj(x, what):
        if x not in obj_ids:
            raise TheoremViolation(f"{what} {x} is not a shared idempotent")
        return obj_ids[x]

    hdom = {a: ver_ids[hop.product(a, ah.inverse(a))] for a in cells}
    hcod = {a: ver_ids[hop.product(ah.inverse(a), a)] for a in cells}
    vdom = {a: hor_ids[vop.product(a, av.inverse(a))] for a in cells}
    vcod = {a: hor_ids[vop.product(av.inverse(a), a)] for a in cells}
    g = DoubleInductiveGroupoid(
        objects=tuple(range(1, len(obj_elems) + 1)),
        ver_arrows=tuple(range(1, len(ver_elems) + 1)),
        hor_arrows=tuple(range(1, len(hor_elems) + 1)),
        cells=cells,
        obj_ver={obj_ids[x]: ver_ids[x] for x in obj_elems},
        obj_hor={obj_ids[x]: hor_ids[x] for x in obj_elems},
        ver_cell={ver_ids[x]: x for x in ver_elems},
        hor_cell={hor_ids[x]: x for x in hor_elems},
        ver_src={
            ver_ids[x]: require_obj(vop.product(x, av.inverse(x)), "vertical-arrow endpoint")
            for x in ver_elems
        },
        ver_dst={
            ver_ids[x]: require_obj(vop.product(av.inverse(x), x), "vertical-arrow endpoint")
            for x in ver_elems
        },
        hor_src={
            hor_ids[x]: require_obj(hop.product(x, ah.inverse(x)), "horizontal-arrow endpoint")
            for x in hor_elems
        },
        hor_dst={
            hor_ids[x]: require_obj(hop.product(ah.inverse(x), x), "horizontal-arrow endpoint")
            for x in hor_elems
        },
        hdom=hdom,
        hcod=hcod,
        vdom=vdom,
        vcod=vcod,
        hcompose={
            (a, b): hop.product(a, b)
            for a in cells
            for b in cells
            if hcod[a] == hdom[b]
        },
        vcompose={
            (a, b): vop.product(a, b)
            for a in cells
            for b in cells
            if vcod[a] == vdom[b]
        },
        hinv={a: ah.inverse(a) for a in cells},
        vinv={a: av.inverse(a) for a in cells},
        leq=ah.leq,
        lesssim=av.leq,
        meet_h={
            (ver_ids[e], ver_ids[f]): ver_ids[hop.product(e, f)]
            for e in ver_elems
            for f in ver_elems
        },
        meet_v={
            (hor_ids[e], hor_ids[f]): hor_ids[vop.product(e, f)]
            for e in hor_elems
            for f in hor_elems
        },
        h_restrict={
            (ver_ids[e], a): hop.product(e, a)
            for e in ver_elems
            for a in cells
            if ah.leq_holds(e, hop.product(a, ah.inverse(a)))
        },
        h_corestrict={
            (a, ver_ids[e]): hop.product(a, e)
            for e in ver_elems
            for a in cells
            if ah.leq_holds(e, hop.product(ah.inverse(a), a))
        },
        v_restrict={
            (hor_ids[e], a): vop.product(e, a)
            for e in hor_elems
            for a in cells
            if av.leq_holds(e, vop.product(a, av.inverse(a)))
        },
        v_corestrict={
            (a, hor_ids[e]): vop.product(a, e)
            for e in hor_elems
            for a in cells
            if av.leq_holds(e, vop.product(av.inverse(a), a))
        },
    )
    if check:
        rep = validate_dig(g)
        if not rep:
            raise TheoremViolation(
                f"construction produced an invalid double groupoid: {rep.summary()}"
            )
        # every cell has all four corner objects equal
        for a in cells:
            corners = {
                g.ver_src[hdom[a]],
                g.ver_src[hcod[a]],
                g.ver_dst[hdom[a]],
                g.ver_dst[hcod[a]],
            }
            if len(corners) != 1:
                raise TheoremViolation(f"cell {a} has unequal corners {sorted(corners)}")
    return g


def dis_from_dig(g: DoubleInductiveGroupoid, check=True) -> DoubleSemigroup:
    """Both pseudo-products, rebuilt from composition, meets and (co)restrictions;
    the result is re-proved to be a double inverse semigroup instance by instance."""
    if check:
        rep = validate_dig(g)
        if not rep:
            raise InvalidDigError(rep)
    ev = _Eval(g)
    n = len(g.cells)
    hrows = []
    vrows = []
    for a in g.cells:
        hrow = []
        vrow = []
        for b in g.cells:
            h = ev.hprod(a, b)
            v = ev.vprod(a, b)
            if h is None or v is None:
                raise InvalidDigError(_partiality_report(a, b, h, v))
            hrow.append(h)
            vrow.append(v)
        hrows.append(tuple(hrow))
        vrows.append(tuple(vrow))
    d = DoubleSemigroup(CayleyTable(tuple(hrows)), CayleyTable(tuple(vrows)))
    if check:
        cls = classify_double(d.hop, d.vop)
        if not cls.is_double_inverse_semigroup:
            raise TheoremViolation(
                f"pseudo-products of a valid double groupoid must form a double "
                f"inverse semigroup: {cls.failure_reason()}"
            )
    return d


def _partiality_report(a, b, h, v):
    rep = ValidationReport()
    which = "horizontal" if h is None else "vertical"
    rep.add("product.partial", (a, b), f"{which} pseudo-product undefined")
    return rep


def skeleton(g: DoubleInductiveGroupoid) -> dict:
    """Everything about g transported to cell ids, for structural comparison."""
    vc, hc = g.ver_cell, g.hor_cell
    oc = {o: g.obj_cell(o) for o in g.objects}
    return {
        "objects": frozenset(oc.values()),
        "ver": frozenset(vc.values()),
        "hor": frozenset(hc.values()),
        "hdom": {a: vc[g.hdom[a]] for a in g.cells},
        "hcod": {a: vc[g.hcod[a]] for a in g.cells},
        "vdom": {a: hc[g.vdom[a]] for a in g.cells},
        "vcod": {a: hc[g.vcod[a]] for a in g.cells},
        "ver_src": {vc[e]: oc[g.ver_src[e]] for e in g.ver_arrows},
        "ver_dst": {vc[e]: oc[g.ver_dst[e]] for e in g.ver_arrows},
        "hor_src": {hc[f]: oc[g.hor_src[f]] for f in g.hor_arrows},
        "hor_dst": {hc[f]: oc[g.hor_dst[f]] for f in g.hor_arrows},
        "hcompose": dict(g.hcompose),
        "vcompose": dict(g.vcompose),
        "hinv": dict(g.hinv),
        "vinv": dict(g.vinv),
        "leq": g.leq,
        "lesssim": g.lesssim,
        "meet_h": {(vc[e], vc[f]): vc[m] for (e, f), m in g.meet_h.items()},
        "meet_v": {(hc[e], hc[f]): hc[m] for (e, f), m in g.meet_v.items()},
        "h_restrict": {(vc[e], a): b for (e, a), b in g.h_restrict.items()},
        "h_corestrict": {(a, vc[e]): b for (a, e), b in g.h_corestrict.items()},
        "v_restrict": {(hc[e], a): b for (e, a), b in g.v_restrict.items()},
        "v_corestrict": {(a, hc[e]): b for (a, e), b in g.v_corestrict.items()},
    }


def dig_equal(g1: DoubleInductiveGroupoid, g2: DoubleInductiveGroupoid) -> bool:
    return g1.cells == g2.cells and skeleton(g1) == skeleton(g2)


def roundtrip_double(d: DoubleSemigroup) -> Verdict:
    """dis_from_dig(dig_from_dis(d)) must reproduce both tables entrywise."""
    back = dis_from_dig(dig_from_dis(d))
    if back.hop.rows == d.hop.rows and back.vop.rows == d.vop.rows:
        return Verdict(True)
    for a in d.hop.elements():
        for b in d.hop.elements():
            if back.hop.product(a, b) != d.hop.product(a, b):
                return Verdict(False, ("hop", a, b))
            if back.vop.product(a, b) != d.vop.product(a, b):
                return Verdict(False, ("vop", a, b))
    return Verdict(False, ())


def roundtrip_dig(g: DoubleInductiveGroupoid) -> Verdict:
    """dig_from_dis(dis_from_dig(g)) must reproduce g up to the cell skeleton."""
    back = dig_from_dis(dis_from_dig(g))
    if dig_equal(back, g):
        return Verdict(True)
    s1, s2 = skeleton(g), skeleton(back)
    for key in s1:
        if s1[key] != s2[key]:
            return Verdict(False, (key,))
    return Verdict(False, ("cells",))


def verify_interchange_identities(g: DoubleInductiveGroupoid) -> ValidationReport:
    """Re-derive the interchange law for the pseudo-products from the groupoid:
    the law itself on every cell quadruple, the two composite-splitting
    identities, and the four meet-transport identities, each checked wherever
    its expressions are defined."""
    rep = validate_dig(g)
    if not rep.ok:
        return rep
    rep = ValidationReport()
    ev = _Eval(g)
    cells = g.cells
    for a in cells:
        for b in cells:
            for c in cells:
                for d in cells:
                    # the interchange law evaluated through the pseudo-products
                    lhs = ev.vprod(ev.hprod(a, b), ev.hprod(c, d))
                    rhs = ev.hprod(ev.vprod(a, c), ev.vprod(b, d))
                    if lhs is None or rhs is None:
                        rep.add("interchange.products", (a, b, c, d), "product undefined")
                    else:
                        rep.bump("interchange.products", True)
                        if lhs != rhs:
                            rep.add("interchange.products", (a, b, c, d))

                    u = ev.meet_h(ev.hcod(a), ev.hdom(b))
                    v = ev.meet_h(ev.hcod(c), ev.hdom(d))
                    au = ev.hcorestrict(a, u)
                    ub = ev.hrestrict(u, b)
                    cv = ev.hcorestrict(c, v)
                    vd = ev.hrestrict(v, d)
                    x = ev.hcomp(au, ub)  # a hprod b
                    y = ev.hcomp(cv, vd)  # c hprod d
                    m = ev.meet_v(ev.vcod(x), ev.vdom(y))
                    # splitting a vertical corestriction of a horizontal composite
                    _guarded(rep, "split.h.i", ev.vcorestrict(x, m),
                             ev.hcomp(
                                 ev.vcorestrict(au, ev.meet_v(ev.vcod(au), ev.vdom(cv))),
                                 ev.vcorestrict(ub, ev.meet_v(ev.vcod(ub), ev.vdom(vd)))),
                             (a, b, c, d))
                    _guarded(rep, "split.h.ii", ev.vrestrict(m, y),
                             ev.hcomp(
                                 ev.vrestrict(ev.meet_v(ev.vcod(au), ev.vdom(cv)), cv),
                                 ev.vrestrict(ev.meet_v(ev.vcod(ub), ev.vdom(vd)), vd)),
                             (a, b, c, d))

                    f = ev.meet_v(ev.vcod(a), ev.vdom(c))
                    gg = ev.meet_v(ev.vcod(b), ev.vdom(d))
                    af = ev.vcorestrict(a, f)
                    fc = ev.vrestrict(f, c)
                    bg = ev.vcorestrict(b, gg)
                    gd = ev.vrestrict(gg, d)
                    p = ev.vcomp(af, fc)  # a vprod c
                    q = ev.vcomp(bg, gd)  # b vprod d
                    mm = ev.meet_h(ev.hcod(p), ev.hdom(q))
                    # splitting a horizontal corestriction of a vertical composite
                    _guarded(rep, "split.v.i", ev.hcorestrict(p, mm),
                             ev.vcomp(
                                 ev.hcorestrict(af, ev.meet_h(ev.hcod(af), ev.hdom(bg))),
                                 ev.hcorestrict(fc, ev.meet_h(ev.hcod(fc), ev.hdom(gd)))),
                             (a, b, c, d))
                    _guarded(rep, "split.v.ii", ev.hrestrict(mm, q),
                             ev.vcomp(
                                 ev.hrestrict(ev.meet_h(ev.hcod(af), ev.hdom(bg)), bg),
                                 ev.hrestrict(ev.meet_h(ev.hcod(fc), ev.hdom(gd)), gd)),
                             (a, b, c, d))

                    # the four identities that move meets through (co)restrictions
                    _guarded(rep, "meets.i",
                             ev.meet_v(ev.vcod(au), ev.vdom(cv)),
                             ev.hcorestrict(ev.meet_v(ev.vcod(a), ev.vdom(c)),
                                            ev.meet_v(ev.vcod(u), ev.vdom(v))),
                             (a, b, c, d))
                    _guarded(rep, "meets.ii",
                             ev.meet_v(ev.vcod(ub), ev.vdom(vd)),
                             ev.hrestrict(ev.meet_v(ev.vcod(u), ev.vdom(v)),
                                          ev.meet_v(ev.vcod(b), ev.vdom(d))),
                             (a, b, c, d))
                    _guarded(rep, "meets.iii",
                             ev.meet_h(ev.hcod(af), ev.hdom(bg)),
                             ev.vcorestrict(ev.meet_h(ev.hcod(a), ev.hdom(b)),
                                            ev.meet_h(ev.hcod(f), ev.hdom(gg))),
                             (a, b, c, d))
                    _guarded(rep, "meets.iv",
                             ev.meet_h(ev.hcod(fc), ev.hdom(gd)),
                             ev.vrestrict(ev.meet_h(ev.hcod(f), ev.hdom(gg)),
                                          ev.meet_h(ev.hcod(c), ev.hdom(d))),
                             (a, b, c, d))
    return rep


def dig_to_json(g: DoubleInductiveGroupoid) -> dict:
    return {
        "schema_version": 1,
        "kind": "double-inductive-groupoid",
        "objects": len(g.objects),
        "ver_arrows": len(g.ver_arrows),
        "hor_arrows": len(g.hor_arrows),
        "cells": len(g.cells),
        "obj_ver": [g.obj_ver[o] for o in g.objects],
        "obj_hor": [g.obj_hor[o] for o in g.objects],
        "ver_cell": [g.ver_cell[e] for e in g.ver_arrows],
        "hor_cell": [g.hor_cell[f] for f in g.hor_arrows],
        "ver_src": [g.ver_src[e] for e in g.ver_arrows],
        "ver_dst": [g.ver_dst[e] for e in g.ver_arrows],
        "hor_src": [g.hor_src[f] for f in g.hor_arrows],
        "hor_dst": [g.hor_dst[f] for f in g.hor_arrows],
        "hdom": [g.hdom[a] for a in g.cells],
        "hcod": [g.hcod[a] for a in g.cells],
        "vdom": [g.vdom[a] for a in g.cells],
        "vcod": [g.vcod[a] for a in g.cells],
        "hcompose": sorted([a, b, c] for (a, b), c in g.hcompose.items()),
        "vcompose": sorted([a, b, c] for (a, b), c in g.vcompose.items()),
        "hinv": [g.hinv[a] for a in g.cells],
        "vinv": [g.vinv[a] for a in g.cells],
        "leq": sorted([a, b] for (a, b) in g.leq),
        "lesssim": sorted([a, b] for (a, b) in g.lesssim),
        "meet_h": sorted([e, f, m] for (e, f), m in g.meet_h.items()),
        "meet_v": sorted([e, f, m] for (e, f), m in g.meet_v.items()),
        "h_restrict": sorted([e, a, b] for (e, a), b in g.h_restrict.items()),
        "h_corestrict": sorted([a, e, b] for (a, e), b in g.h_corestrict.items()),
        "v_restrict": sorted([e, a, b] for (e, a), b in g.v_restrict.items()),
        "v_corestrict": sorted([a, e, b] for (a, e), b in g.v_corestrict.items()),
    }


def dig_from_json(doc: dict) -> DoubleInductiveGroupoid:
    objects = tuple(range(1, int(doc["objects"]) + 1))
    ver = tuple(range(1, int(doc["ver_arrows"]) + 1))
    hor = tuple(range(1, int(doc["hor_arrows"]) + 1))
    cells = tuple(range(1, int(doc["cells"]) + 1))
    pos = lambda seq, ids: {i: seq[i - 1] for i in ids}
    return DoubleInductiveGroupoid(
        objects=objects,
        ver_arrows=ver,
        hor_arrows=hor,
        cells=cells,
        obj_ver=pos(doc["obj_ver"], objects),
        obj_hor=pos(doc["obj_hor"], objects),
        ver_cell=pos(doc["ver_cell"], ver),
        hor_cell=pos(doc["hor_cell"], hor),
        ver_src=pos(doc["ver_src"], ver),
        ver_dst=pos(doc["ver_dst"], ver),
        hor_src=pos(doc["hor_src"], hor),
        hor_dst=pos(doc["hor_dst"], hor),
        hdom=pos(doc["hdom"], cells),
        hcod=pos(doc["hcod"], cells),
        vdom=pos(doc["vdom"], cells),
        vcod=pos(doc["vcod"], cells),
        hcompose={(a, b): c for a, b, c in doc["hcompose"]},
        vcompose={(a, b): c for a, b, c in doc["vcompose"]},
        hinv=pos(doc["hinv"], cells),
        vinv=pos(doc["vinv"], cells),
        leq=frozenset((a, b) for a, b in doc["leq"]),
        lesssim=frozenset((a, b) for a, b in doc["lesssim"]),
        meet_h={(e, f): m for e, f, m in doc["meet_h"]},
        meet_v={(e, f): m for e, f, m in doc["meet_v"]},
        h_restrict={(e, a): b for e, a, b in doc["h_restrict"]},
        h_corestrict={(a, e): b for a, e, b in doc["h_corestrict"]},
        v_restrict={(e, a): b for e, a, b in doc["v_restrict"]},
        v_corestrict={(a, e): b for a, e, b in doc["v_corestrict"]},
    )
