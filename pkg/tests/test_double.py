import json

import pytest

from conftest import all_tables
from esnlab.double import (
    DoubleInductiveGroupoid,
    DoubleSemigroup,
    check_interchange,
    classify_double,
    commutativity_report,
    dig_equal,
    dig_from_dis,
    dig_from_json,
    dig_to_json,
    dis_from_dig,
    is_double_inverse_semigroup,
    is_double_semigroup,
    is_proper,
    roundtrip_dig,
    roundtrip_double,
    validate_dig,
    verify_interchange_identities,
)
from esnlab.errors import InvalidDigError, NotDoubleInverseError
from esnlab.presheaf import dig_from_presheaf
from esnlab.fixtures import load_pair, load_presheaf
from esnlab.tables import (
    chain_semilattice,
    cyclic_group,
    left_projection,
    right_projection,
)


def test_interchange_projections():
    for n in (2, 3):
        assert check_interchange(right_projection(n), left_projection(n))
        assert check_interchange(left_projection(n), right_projection(n))


def test_interchange_commutative_self_pairs(b2, clifford3):
    for t in (cyclic_group(3), chain_semilattice(3), clifford3):
        assert check_interchange(t, t)


def test_interchange_brandt_self_fails(b2):
    verdict = check_interchange(b2, b2)
    assert not verdict and verdict.witness == (2, 2, 3, 3)


def test_interchange_swap_symmetry():
    # the law's quadruple family is closed under swapping the two operations
    tables2 = list(all_tables(2))
    for hop in tables2:
        for vop in tables2:
            assert check_interchange(hop, vop).holds == check_interchange(vop, hop).holds


def test_classification(b2, clifford3):
    z2 = cyclic_group(2)
    assert is_double_semigroup(DoubleSemigroup(z2, z2))
    assert is_double_inverse_semigroup(DoubleSemigroup(z2, z2))
    proj = DoubleSemigroup(left_projection(2), right_projection(2))
    assert is_double_semigroup(proj)
    assert not is_double_inverse_semigroup(proj)
    assert "generalized inverses" in classify_double(proj.hop, proj.vop).failure_reason()
    assert is_double_inverse_semigroup(DoubleSemigroup(clifford3, clifford3))
    assert not is_double_semigroup(DoubleSemigroup(b2, b2))


def test_proper(b2):
    assert is_proper(DoubleSemigroup(left_projection(2), right_projection(2)))
    z2 = cyclic_group(2)
    assert not is_proper(DoubleSemigroup(z2, z2))


def test_commutativity_report(clifford3):
    z2 = cyclic_group(2)
    assert commutativity_report(DoubleSemigroup(z2, z2)) == {
        "hop_commutative": True,
        "vop_commutative": True,
    }
    with pytest.raises(NotDoubleInverseError):
        commutativity_report(
            DoubleSemigroup(left_projection(2), right_projection(2))
        )


def test_dig_shapes(clifford3):
    z2 = cyclic_group(2)
    g = dig_from_dis(DoubleSemigroup(z2, z2))
    assert (len(g.objects), len(g.ver_arrows), len(g.hor_arrows), len(g.cells)) == (1, 1, 1, 2)
    g3 = dig_from_dis(DoubleSemigroup(chain_semilattice(3), chain_semilattice(3)))
    assert (len(g3.objects), len(g3.cells)) == (3, 3)
    assert all(g3.hcompose.get((a, a)) == a for a in g3.cells)
    gc = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    assert len(gc.objects) == 2 and len(gc.cells) == 3


def test_dig_corners_equal(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    for a in g.cells:
        corners = {
            g.ver_src[g.hdom[a]],
            g.ver_src[g.hcod[a]],
            g.ver_dst[g.hdom[a]],
            g.ver_dst[g.hcod[a]],
        }
        assert len(corners) == 1


def test_dig_from_dis_rejects_non_double_inverse():
    with pytest.raises(NotDoubleInverseError):
        dig_from_dis(DoubleSemigroup(left_projection(2), right_projection(2)))


def test_validate_dig_accepts_constructions(clifford3):
    for t in (cyclic_group(2), chain_semilattice(3), clifford3, cyclic_group(4)):
        g = dig_from_dis(DoubleSemigroup(t, t))
        rep = validate_dig(g, strict_ix=True)
        assert rep.ok
        assert not rep.notes  # the two readings of the odd axiom line agree


def _mutate(g, **changes):
    fields = {name: getattr(g, name) for name in g.__dataclass_fields__}
    fields.update(changes)
    return DoubleInductiveGroupoid(**fields)


def test_validate_dig_flags_corrupt_meet():
    g = dig_from_dis(DoubleSemigroup(chain_semilattice(3), chain_semilattice(3)))
    bad_meet = dict(g.meet_h)
    bad_meet[(1, 3)] = 2  # the meet of the ends of the chain is its bottom
    rep = validate_dig(_mutate(g, meet_h=bad_meet))
    assert not rep.ok
    families = {v.axiom.split(".", 1)[0] for v in rep.violations}
    assert families & {"vii", "viii"}
    assert ("vii", (1, 3, 2, 2)) in {(v.axiom, v.witness) for v in rep.violations}


def test_validate_dig_flags_corrupt_composition(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    bad = dict(g.hcompose)
    bad[(2, 3)] = 2  # 2 after 3 is 3 in the group component
    rep = validate_dig(_mutate(g, hcompose=bad))
    assert not rep.ok


def test_validate_dig_flags_corrupt_restriction(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    bad = dict(g.h_restrict)
    key = next(iter(bad))
    bad[key] = 3 if bad[key] != 3 else 2
    rep = validate_dig(_mutate(g, h_restrict=bad))
    assert not rep.ok


def test_dis_from_dig_recovers_tables(clifford3):
    for t in (cyclic_group(2), chain_semilattice(3), clifford3):
        d = DoubleSemigroup(t, t)
        back = dis_from_dig(dig_from_dis(d))
        assert back.hop.rows == t.rows and back.vop.rows == t.rows


def test_dis_from_presheaf_built_dig():
    g = dig_from_presheaf(load_presheaf("clifford3_presheaf.json"))
    d = dis_from_dig(g)
    expected = load_pair("clifford3_pair.cay")
    assert d.hop.rows == expected.hop.rows
    assert d.vop.rows == expected.vop.rows


def test_products_extend_compositions(clifford3):
    # where cells already compose, the pseudo-products agree with composition
    for t in (cyclic_group(2), clifford3, chain_semilattice(3)):
        g = dig_from_dis(DoubleSemigroup(t, t))
        d = dis_from_dig(g)
        for (a, b), c in g.hcompose.items():
            assert d.hop.product(a, b) == c
        for (a, b), c in g.vcompose.items():
            assert d.vop.product(a, b) == c


def test_dis_from_dig_rejects_broken(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    broken = _mutate(g, h_restrict={}, h_corestrict={}, v_restrict={}, v_corestrict={})
    with pytest.raises(InvalidDigError):
        dis_from_dig(broken)


def test_roundtrips_fixture_pairs(clifford3):
    for name in ("z2_pair.cay", "clifford3_pair.cay"):
        d = load_pair(name)
        assert roundtrip_double(d)
        assert roundtrip_dig(dig_from_dis(d))


def test_dig_equal_distinguishes(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    assert dig_equal(g, g)
    other = dig_from_dis(
        DoubleSemigroup(chain_semilattice(3), chain_semilattice(3))
    )
    assert not dig_equal(g, other)


def test_interchange_identities_on_constructions(clifford3):
    for t in (cyclic_group(2), clifford3, chain_semilattice(3)):
        g = dig_from_dis(DoubleSemigroup(t, t))
        rep = verify_interchange_identities(g)
        assert rep.ok
        assert rep.substantive.get("interchange.products", 0) == len(g.cells) ** 4


def test_interchange_identities_flag_mutations(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    bad = dict(g.hcompose)
    bad[(2, 3)] = 2
    rep = verify_interchange_identities(_mutate(g, hcompose=bad))
    assert not rep.ok


def test_dig_json_io(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    doc = json.loads(json.dumps(dig_to_json(g)))
    back = dig_from_json(doc)
    assert dig_equal(back, g)
    assert validate_dig(back).ok


def test_dig_json_io_presheaf_built():
    g = dig_from_presheaf(load_presheaf("clifford3_presheaf.json"))
    back = dig_from_json(json.loads(json.dumps(dig_to_json(g))))
    assert dig_equal(back, g)
    assert validate_dig(back).ok


def test_shared_idempotent_formula(b2, clifford3):
    # (a v a') h (a v a')' lands in the intersection of the idempotent sets
    from esnlab.inverse import analyze_inverse
    from esnlab.tables import idempotents

    for t in (cyclic_group(2), clifford3, chain_semilattice(3)):
        ah = av = analyze_inverse(t)
        shared = set(idempotents(t))
        for a in t.elements():
            e = t.product(a, av.inverse(a))
            candidate = t.product(e, ah.inverse(e))
            assert candidate in shared


def test_validate_dig_flags_corrupt_order(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    rep = validate_dig(_mutate(g, leq=frozenset((a, a) for a in g.cells)))
    assert not rep.ok  # restrictions now point below a discrete order
    rep = validate_dig(_mutate(g, lesssim=g.lesssim | {(2, 3)}))
    assert not rep.ok


def test_validate_dig_flags_corrupt_boundary(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    bad_hdom = dict(g.hdom)
    bad_hdom[3] = 1  # cell 3 lives over the top object, not the bottom
    rep = validate_dig(_mutate(g, hdom=bad_hdom))
    assert not rep.ok


def test_validator_total_on_random_mutations(clifford3):
    """validate_dig reports on corrupted structures instead of crashing."""
    import random

    rng = random.Random(2024)
    base = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    dict_fields = [
        "hcompose", "vcompose", "meet_h", "meet_v", "hinv", "vinv",
        "h_restrict", "h_corestrict", "v_restrict", "v_corestrict",
        "hdom", "hcod", "vdom", "vcod",
    ]
    for _ in range(120):
        field = rng.choice(dict_fields)
        table = dict(getattr(base, field))
        key = rng.choice(sorted(table))
        limit = len(base.cells)
        table[key] = rng.randint(1, limit if field not in ("meet_h", "meet_v") else 2)
        mutated = _mutate(base, **{field: table})
        rep = validate_dig(mutated, strict_ix=rng.random() < 0.5)
        assert rep is not None
    for _ in range(40):
        pairs = set(base.leq)
        a = rng.choice(base.cells)
        b = rng.choice(base.cells)
        pairs.symmetric_difference_update({(a, b)})
        rep = validate_dig(_mutate(base, leq=frozenset(pairs)))
        assert rep is not None


def test_substantive_families_on_two_object_fixture(clifford3):
    g = dig_from_dis(DoubleSemigroup(clifford3, clifford3))
    families = validate_dig(g).substantive_by_family()
    for family in ("iii", "iv", "v", "vi", "vii", "viii", "ix"):
        assert families.get(family, 0) >= 1, family
