"""Stratum signatures, dimension arithmetic, density verdicts."""

import itertools

import pytest

from pinchcert import (
    StratumSignature,
    ValidationError,
    coarse_density_verdict,
    dim_projective_stratum,
)


def partitions(total):
    """All partitions of ``total`` into positive parts (non-increasing)."""
    if total == 0:
        yield ()
        return
    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest
    yield from rec(total, total)


class TestSignature:
    def test_genus_derivation(self):
        assert StratumSignature((2,)).genus == 2
        assert StratumSignature((1, 1)).genus == 2
        assert StratumSignature((4,)).genus == 3
        assert StratumSignature((2, 2)).genus == 3

    @pytest.mark.parametrize("bad", [(), (3,), (0, 2), (-2, 4), (1,)])
    def test_invalid_partitions(self, bad):
        with pytest.raises(ValidationError):
            StratumSignature(bad)

    def test_error_names_violation(self):
        with pytest.raises(ValidationError) as err:
            StratumSignature((3,))
        assert "even" in str(err.value)


class TestDimension:
    @pytest.mark.parametrize(
        "kappa,dim", [((2,), 3), ((1, 1), 4), ((4,), 5), ((2, 2), 6), ((1, 1, 1, 1), 8)]
    )
    def test_pinned(self, kappa, dim):
        assert dim_projective_stratum(StratumSignature(kappa)) == dim


class TestVerdict:
    def test_minimal_genus_two_dense_at_threshold(self):
        verdict = coarse_density_verdict(StratumSignature((2,)))
        assert verdict.verdict == "dense"
        assert verdict.dim_PH == 3 == verdict.threshold

    def test_genus_three_minimal_not_dense(self):
        verdict = coarse_density_verdict(StratumSignature((4,)))
        assert verdict.verdict == "not_dense"
        assert verdict.dim_PH == 5 and verdict.threshold == 6

    def test_principal_stratum_dense(self):
        verdict = coarse_density_verdict(StratumSignature((1, 1, 1, 1)))
        assert verdict.verdict == "dense"

    def test_all_twos_caveat(self):
        verdict = coarse_density_verdict(StratumSignature((2, 2)))
        assert verdict.verdict == "dense"
        assert verdict.caveat is not None
        assert "only true for the whole stratum" in verdict.caveat

    def test_no_caveat_elsewhere(self):
        assert coarse_density_verdict(StratumSignature((2,))).caveat is None
        assert coarse_density_verdict(StratumSignature((1, 1))).caveat is None
        assert coarse_density_verdict(StratumSignature((2, 2, 1, 1))).caveat is None

    def test_exhaustive_equivalence_small_genus(self):
        # dense <=> n >= g - 1, on every partition with g <= 12
        for g in range(2, 13):
            for kappa in partitions(2 * g - 2):
                verdict = coarse_density_verdict(StratumSignature(kappa))
                assert (verdict.verdict == "dense") == (len(kappa) >= g - 1)
                assert (verdict.dim_PH >= verdict.threshold) == (
                    len(kappa) >= g - 1
                )

    def test_minimal_stratum_scan(self):
        # the single-zero stratum is dense only in genus 2
        for g in range(2, 51):
            verdict = coarse_density_verdict(StratumSignature((2 * g - 2,)))
            assert (verdict.verdict == "dense") == (g <= 2)

    def test_permutation_invariance(self):
        for kappa in [(1, 2, 1), (4, 2), (1, 1, 3, 1)]:
            results = {
                coarse_density_verdict(StratumSignature(perm)).verdict
                for perm in set(itertools.permutations(kappa))
            }
            assert len(results) == 1

    def test_json_doc_shape(self):
        doc = coarse_density_verdict(StratumSignature((2, 2))).to_json_doc()
        assert set(doc) == {"kappa", "genus", "n", "dim_PH", "threshold", "verdict", "caveat"}
        doc2 = coarse_density_verdict(StratumSignature((4,))).to_json_doc()
        assert "caveat" not in doc2
