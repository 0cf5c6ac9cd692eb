"""Non-cyclic multiplication tables: a four-element group with two
generators and a three-element join semilattice, checked against
independently known values and the enumeration oracle."""

from monoid_cohomology.cohomology import brute_force_cohomology, cohomology_group
from monoid_cohomology.hmod import FGAbelianGroup, constant_module
from monoid_cohomology.monoid import validate_table
from monoid_cohomology.zlinalg import AbGroupInvariants

KLEIN = validate_table(4, 0, [[x ^ y for y in range(4)] for x in range(4)])
SEMILATTICE = validate_table(3, 0, [[0, 1, 2], [1, 1, 2], [2, 2, 2]])


def zmod(n):
    return FGAbelianGroup.cyclic(n)


def test_klein_mod2_level1_dimensions():
    # mod-2 cohomology of the group is a polynomial ring on two
    # one-dimensional classes: dimensions 1, 2, 3, 4, ...
    A = constant_module(zmod(2), KLEIN)
    for n, dim in ((0, 1), (1, 2), (2, 3), (3, 4)):
        assert cohomology_group(KLEIN, 1, n, A) == \
            AbGroupInvariants(0, (2,) * dim)


def test_klein_integral_level1():
    A = constant_module(FGAbelianGroup.free(1), KLEIN)
    assert cohomology_group(KLEIN, 1, 1, A).is_trivial()
    assert cohomology_group(KLEIN, 1, 2, A) == AbGroupInvariants(0, (2, 2))


def test_klein_level2():
    # degree r+1 sees the character group, degree r+2 the quadratic
    # construction on the group: for (Z/2)^2 it contributes
    # Z/4 + Z/4 + Z/2, whose mod-2 dual is (Z/2)^3
    A = constant_module(zmod(2), KLEIN)
    assert cohomology_group(KLEIN, 2, 3, A) == AbGroupInvariants(0, (2, 2))
    assert cohomology_group(KLEIN, 2, 4, A) == AbGroupInvariants(0, (2, 2, 2))
    AZ = constant_module(FGAbelianGroup.free(1), KLEIN)
    assert cohomology_group(KLEIN, 2, 4, AZ).is_trivial()


def test_semilattice_level1():
    A = constant_module(zmod(2), SEMILATTICE)
    # a derivation vanishes on idempotents: f(x) + f(x) = f(x) = 0
    assert cohomology_group(SEMILATTICE, 1, 1, A).is_trivial()


def test_semilattice_oracle_agreement():
    A = constant_module(zmod(2), SEMILATTICE)
    for r, n in ((2, 2), (2, 3), (2, 4), (3, 5)):
        z, b, inv = brute_force_cohomology(SEMILATTICE, r, n, A)
        assert cohomology_group(SEMILATTICE, r, n, A) == inv
