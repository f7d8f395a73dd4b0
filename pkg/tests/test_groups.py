import pytest

from orbigm.groups import DiagonalGroup, cyclic_two_group, trivial_group
from orbigm.models import build_model
from orbigm.scalars import Cyclo


def test_z2_structure():
    G = cyclic_two_group()
    assert len(G) == 2
    assert G.mul(1, 1) == 0
    assert G.inv(1) == 1
    assert G.eigen(1) == (-1, -1)
    assert G.act_mono(1, (3, 2)) == -1
    assert G.act_mono(1, (2, 2)) == 1
    assert G.unfixed_vars(1) == (0, 1)
    assert G.unfixed_vars(0) == ()
    assert G.is_calabi_yau()


def test_trivial_group():
    G = trivial_group()
    assert len(G) == 1
    assert G.is_calabi_yau()


def test_closure_enforced():
    with pytest.raises(ValueError):
        DiagonalGroup(4, [(0, 0), (1, 1)])


def test_z4_diagonal():
    G = DiagonalGroup(4, [(0, 0), (1, 3), (2, 2), (3, 1)])
    assert G.is_calabi_yau()
    lam, mu = G.eigen(1)
    assert isinstance(lam, Cyclo)
    assert lam * mu == 1
    assert G.eigen(2) == (-1, -1)
    assert G.mul(1, 3) == 0
    assert G.unfixed_vars(2) == (0, 1)


def test_aorb_sector_bases():
    for n in (2, 3, 4, 5):
        model = build_model("aorb", n)
        untwisted = model.sectors[0]
        twisted = model.sectors[1]
        assert untwisted.basis == [(k, 0) for k in range(2 * n - 1)]
        assert twisted.basis == [(0, 0)]
        # orbifold rank: invariant part of the untwisted basis plus the point sector
        inv = [m for m in untwisted.basis if model.group.act_mono(1, m) == 1]
        assert len(inv) + len(twisted.basis) == n + 1


def test_d_sector_bases():
    for n in (2, 3, 4, 5):
        model = build_model("d", n)
        assert len(model.sectors) == 1
        assert sorted(model.sectors[0].basis) == sorted(
            [(k, 0) for k in range(n)] + [(0, 1)])


def test_twisted_sector_normal_form():
    model = build_model("aorb", 2)
    tw = model.sectors[1]
    assert tw.normal_form({(0, 0): 5, (2, 0): 3}) == {(0, 0): 5}
    assert tw.restrict({(1, 1): 2}) == {}
