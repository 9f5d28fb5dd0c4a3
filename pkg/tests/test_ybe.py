import pytest

from spincas import ybe
from spincas.linalg import ExactMatrix
from spincas.ratfunc import Poly, RationalFunction, rising_factorial
from spincas.scalar import Rat


def test_tau_coefficients():
    top = ybe.tau_coefficient(2, 0)
    assert top == RationalFunction.const(1)
    first = ybe.tau_coefficient(2, 1)
    assert first(Rat(3)) == Rat(1, 2)
    braid = ybe.tau_coefficient(2, 1, "braid")
    assert braid(Rat(3)) == Rat(-1, 2)
    assert first.is_pole(Rat(-1))


def test_family_structure():
    family = ybe.sector_r_matrix(4, "+")
    assert [label for label, _ in family.terms] == [4, 2, 0]
    family = ybe.sector_r_matrix(5, "-")
    assert [label for label, _ in family.terms] == [5, 3, 1]


def test_family_at_u_one_is_top_projector():
    # every non-top coefficient contains the factor (u - 1)
    family = ybe.sector_r_matrix(2, "+")
    assert family.evaluate(1) == family.projector(2)


def test_family_at_zero_squares_to_identity():
    family = ybe.sector_r_matrix(3, "+")
    value = family.evaluate(0)
    assert value @ value == ExactMatrix.identity(value.dim)


def test_admissible_grid():
    us, vs = ybe.admissible_grid(3)
    assert len(us) == len(vs) == 9
    assert len(set(us)) == 9 and len(set(vs)) == 9
    for u in us:
        for v in vs:
            for point in (u, v, u + v):
                assert point.denominator != 1  # never an integer, so never a pole


@pytest.mark.parametrize("r", [2, 3])
def test_braid_ybe_grid(r):
    record = ybe.ybe_check(r, "+")
    assert record.ok, [c.check_id for c in record.failures]
    assert len(record.checks) == (2 * r + 3) ** 2


def test_plain_ybe_spot():
    us, vs = ybe.admissible_grid(2)
    record = ybe.plain_ybe_spot_check(2, "+", [(us[0], vs[0]), (us[2], vs[3])])
    assert record.ok, [c.check_id for c in record.failures]


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("eps", ["+", "-"])
def test_unitarity(r, eps):
    assert ybe.unitarity_check(r, eps).ok


@pytest.mark.parametrize("r", [2, 3])
def test_swap_symmetry(r):
    assert ybe.symmetry_check(r, "+").ok


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_asymptotics(r):
    record = ybe.asymptotic_check(r)
    assert record.ok, [c.check_id for c in record.failures]


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_tau_ratio_constraints(r):
    record = ybe.tau_ratio_constraints(r)
    assert record.ok, [c.check_id for c in record.failures]


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_coefficient_consistency(r):
    record = ybe.coefficient_consistency(r)
    assert record.ok, [c.check_id for c in record.failures]


def test_recurrence_ratio_example():
    rec = ybe.recurrence_coefficients(2)
    ratio = rec.even[1] / rec.even[0]
    # step from the seed: u / (2 - 2r - u) at r = 2
    assert ratio == RationalFunction(Poly([0, 1]), Poly([2, 1])) * Rat(-1)


def test_closed_form_example():
    closed = ybe.closed_form_coefficients(2)
    u = Rat(6)
    # rf(u/2, 0) rf(u/2, 2) and -rf(u/2, 1)^2 at u = 6
    assert closed.even[0](u) == Rat(12)
    assert closed.even[1](u) == Rat(-9)


@pytest.mark.parametrize("r", [2, 3])
def test_full_ybe(r):
    record = ybe.full_ybe_check(r)
    assert record.ok, [c.check_id for c in record.failures]


@pytest.mark.parametrize("r", [2, 3])
def test_chirality_split(r):
    record = ybe.chirality_split_check(r)
    assert record.ok, [c.check_id for c in record.failures]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_top_projector_relations(r):
    record = ybe.top_projector_relations(r)
    assert record.ok, [c.check_id for c in record.failures]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_symmetric_part_factorization(r):
    record = ybe.symmetric_part_factorization(r)
    assert record.ok, [c.check_id for c in record.failures]


def test_rising_factorial_identity():
    record = ybe.rising_factorial_identity(max_r=8, num_points=20)
    assert record.ok, [c.check_id for c in record.failures]


def test_rising_factorial_polynomial():
    x = Poly.x()
    rf3 = rising_factorial(x, 3)
    assert rf3(Rat(2)) == Rat(24)
    assert rf3.degree == 3
