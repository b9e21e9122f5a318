import math

import pytest

from breakpark import counting, knm, reptheory as rt


class TestPartitions:
    def test_zero(self):
        assert rt.partitions_of(0) == [()]

    def test_three(self):
        assert rt.partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]

    def test_count_nine(self):
        assert len(rt.partitions_of(9)) == 30

    def test_reverse_lex_order(self):
        parts = rt.partitions_of(6)
        assert parts == sorted(parts, reverse=True)


class TestClassSize:
    def test_identity(self):
        assert rt.class_size((1, 1, 1, 1)) == 1

    def test_full_cycle(self):
        for n in range(1, 8):
            assert rt.class_size((n,)) == math.factorial(n - 1)

    def test_transpositions_s3(self):
        assert rt.class_size((2, 1)) == 3

    def test_sizes_sum_to_factorial(self):
        for n in range(1, 8):
            assert sum(
                rt.class_size(mu) for mu in rt.partitions_of(n)
            ) == math.factorial(n)


class TestMurnaghanNakayama:
    def test_trivial_rep(self):
        for mu in rt.partitions_of(5):
            assert rt.murnaghan_nakayama((5,), mu) == 1

    def test_sign_rep(self):
        for mu in rt.partitions_of(5):
            sign = (-1) ** (sum(mu) - len(mu))
            assert rt.murnaghan_nakayama((1, 1, 1, 1, 1), mu) == sign

    def test_single_strip(self):
        assert rt.murnaghan_nakayama((2, 1), (3,)) == -1

    def test_dimension_via_identity(self):
        # hook length formula cross-check on S_4
        dims = {
            (4,): 1, (3, 1): 3, (2, 2): 2, (2, 1, 1): 3, (1, 1, 1, 1): 1,
        }
        for lam, dim in dims.items():
            assert rt.murnaghan_nakayama(lam, (1, 1, 1, 1)) == dim

    @pytest.mark.parametrize("n", range(1, 8))
    def test_column_orthogonality(self, n):
        parts = rt.partitions_of(n)
        for mu in parts:
            for nu in parts:
                acc = sum(
                    rt.murnaghan_nakayama(lam, mu) * rt.murnaghan_nakayama(lam, nu)
                    for lam in parts
                )
                expected = (
                    math.factorial(n) // rt.class_size(mu) if mu == nu else 0
                )
                assert acc == expected


class TestCharacterBreak:
    def test_identity_class_is_cardinality(self):
        assert rt.character_break_closed(2, 3, (1, 1, 1)) == 12

    def test_full_cycle_vanishes(self):
        assert rt.character_break_closed(2, 3, (3,)) == 0

    def test_doubled_case(self):
        # d=2, m odd, n = 2 mod 4
        assert rt.character_break_closed(1, 6, (2, 2, 2)) == 2 * 1 * 6
        assert rt.character_break_closed(
            1, 6, (2, 2, 2)
        ) == rt.character_break_bruteforce(1, 6, (2, 2, 2))

    def test_bruteforce_23(self):
        assert rt.character_break_bruteforce(2, 3, (1, 1, 1)) == 12
        assert rt.character_break_bruteforce(2, 3, (2, 1)) == 2
        assert rt.character_break_bruteforce(2, 3, (3,)) == 0

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_closed_equals_bruteforce(self, m, n):
        for lam in rt.partitions_of(n):
            assert rt.character_break_closed(
                m, n, lam
            ) == rt.character_break_bruteforce(m, n, lam)


class TestHExpansion:
    def test_break_23(self):
        breaks = knm.enumerate_break(knm.KnmParams(2, 3))
        reps = sorted({knm.sort_orbit_key(b) for b in breaks})
        assert rt.perm_module_h_expansion(reps) == {(1, 1, 1): 1, (2, 1): 2}

    def test_park_23(self):
        parks = knm.enumerate_parking(knm.KnmParams(2, 3))
        reps = sorted({knm.sort_orbit_key(a) for a in parks})
        assert rt.perm_module_h_expansion(reps) == {(1, 1): 5, (2,): 2}

    def test_constant_tuple(self):
        assert rt.perm_module_h_expansion([(7, 7, 7, 7)]) == {(4,): 1}

    def test_h_character_matches_fixed_points(self):
        # the tabloid-count character must reproduce brute-force fixed
        # points of the break module
        m, n = 2, 4
        breaks = knm.enumerate_break(knm.KnmParams(m, n))
        reps = sorted({knm.sort_orbit_key(b) for b in breaks})
        h = rt.perm_module_h_expansion(reps)
        chi = rt.h_module_character(h, n)
        for lam in rt.partitions_of(n):
            assert chi[lam] == rt.character_break_bruteforce(m, n, lam)


class TestSchurExpansion:
    def test_break_23(self):
        chi = rt.character_break(2, 3)
        assert rt.schur_expansion(chi) == {
            (3,): 3, (2, 1): 4, (1, 1, 1): 1,
        }

    def test_park_23(self):
        chi = rt.character_parking(2, 3)
        assert rt.schur_expansion(chi) == {(2,): 7, (1, 1): 5}

    def test_irreducible_is_unit_vector(self):
        lam = (3, 2)
        chi = {mu: rt.murnaghan_nakayama(lam, mu) for mu in rt.partitions_of(5)}
        assert rt.schur_expansion(chi) == {lam: 1}

    def test_h_to_s_roundtrip(self):
        assert rt.h_to_s({(1, 1, 1): 1, (2, 1): 2}, 3) == {
            (3,): 3, (2, 1): 4, (1, 1, 1): 1,
        }
        assert rt.h_to_s({(2,): 2, (1, 1): 5}, 2) == {(2,): 7, (1, 1): 5}

    @pytest.mark.parametrize("m,n", [(1, 3), (1, 4), (2, 3), (2, 4)])
    def test_nonnegative_for_modules(self, m, n):
        p = knm.KnmParams(m, n)
        for tuples, degree in [
            (knm.enumerate_break(p), n),
            (knm.enumerate_parking(p), n - 1),
            (knm.enumerate_residue_tuples(p), n),
        ]:
            reps = sorted({knm.sort_orbit_key(t) for t in tuples})
            coeffs = rt.h_to_s(rt.perm_module_h_expansion(reps), degree)
            assert all(c > 0 for c in coeffs.values())


class TestRestriction:
    def test_23_matches_parking(self):
        chi = rt.character_break(2, 3)
        assert rt.restrict_character(chi) == rt.character_parking(2, 3)

    def test_trivial_restricts_to_trivial(self):
        chi = {mu: 1 for mu in rt.partitions_of(4)}
        assert rt.restrict_character(chi) == {
            mu: 1 for mu in rt.partitions_of(3)
        }

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_theorem_restriction(self, m, n):
        chi = rt.character_break(m, n)
        assert rt.restrict_character(chi) == rt.character_parking(m, n)


class TestShiftClassModule:
    @pytest.mark.parametrize("m", [1, 2])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_isomorphic_to_break(self, m, n):
        assert rt.character_shift_classes_bruteforce(m, n) == rt.character_break(
            m, n
        )


class TestTrivialMultiplicity:
    def test_24(self):
        assert rt.trivial_multiplicity(rt.character_break(2, 4)) == 10

    def test_23(self):
        assert rt.trivial_multiplicity(rt.character_break(2, 3)) == 3

    def test_trivial_character(self):
        chi = {mu: 1 for mu in rt.partitions_of(5)}
        assert rt.trivial_multiplicity(chi) == 1

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_equals_dt_and_orbit_keys(self, m, n):
        chi = rt.character_break(m, n)
        breaks = knm.enumerate_break(knm.KnmParams(m, n))
        keys = {knm.sort_orbit_key(b) for b in breaks}
        assert (
            rt.trivial_multiplicity(chi)
            == counting.dt_invariant(m, n)
            == len(keys)
            == rt.dominated_partition_count(m, n)
        )


class TestDominatedCount:
    def test_24_paper_value(self):
        assert rt.dominated_partition_count(2, 4) == 10
