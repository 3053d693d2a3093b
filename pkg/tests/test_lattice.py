"""Lattice sum over paths against exhaustive enumeration."""

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tachyon.amplitudes import Path, PathEnsemble, amplitude, phase, phasor
from tachyon.errors import EnumerationCapError
from tachyon.lattice import Lattice, build_path, count_paths, iter_move_sequences, lattice_path_sum


def brute_force(lattice):
    """Every move sequence via itertools.product, kept if it reaches the sink."""
    seqs = [seq for seq in itertools.product(lattice.moves, repeat=lattice.steps) if sum(seq) == lattice.shift]
    total = 0j
    for seq in seqs:
        total += phasor(phase(build_path(lattice, seq)))
    return total / len(seqs), seqs


lattices = st.builds(
    Lattice,
    steps=st.integers(1, 7),
    shift=st.integers(-3, 3),
    dx=st.floats(0.05, 0.3),
    mass=st.floats(0.5, 5.0),
    moves=st.sampled_from([(-1, 1), (-1, 0, 1), (-2, 0, 1)]),
)


class TestEnumeration:
    @given(lattices)
    def test_counts_and_order(self, lattice):
        _, seqs = brute_force(lattice) if count_paths(lattice) else (None, [])
        assert count_paths(lattice) == len(seqs)
        assert list(iter_move_sequences(lattice)) == seqs

    @pytest.mark.parametrize("steps,shift", [(6, 0), (8, 2), (9, -3)])
    def test_binomial(self, steps, shift):
        lattice = Lattice(steps, shift, moves=(-1, 1))
        assert count_paths(lattice) == math.comb(steps, (steps + shift) // 2)

    @given(lattices)
    def test_bit_exact(self, lattice):
        if not count_paths(lattice):
            with pytest.raises(ValueError):
                lattice_path_sum(lattice)
            return
        expected, _ = brute_force(lattice)
        assert lattice_path_sum(lattice) == expected

    @given(lattices)
    def test_transfer_agrees(self, lattice):
        if count_paths(lattice):
            assert lattice_path_sum(lattice, method="transfer") == pytest.approx(lattice_path_sum(lattice), abs=1e-12)


class TestSmallCases:
    def test_single_step(self):
        lattice = Lattice(1, 1)
        assert lattice_path_sum(lattice) == phasor(phase(build_path(lattice, (1,))))

    def test_two_paths_by_hand(self):
        lattice = Lattice(2, 0, moves=(-1, 1))
        paths = (build_path(lattice, (-1, 1)), build_path(lattice, (1, -1)))
        ens = PathEnsemble(lattice.source, lattice.sink, paths)
        assert lattice_path_sum(lattice) == amplitude(ens)

    def test_cap(self):
        with pytest.raises(EnumerationCapError) as exc:
            lattice_path_sum(Lattice(20, 0), cap=100)
        assert exc.value.count == count_paths(Lattice(20, 0))

    def test_uniform_moves_do_not_interfere(self):
        # +-1 steps all share one proper time, so every path has the same phase
        assert abs(lattice_path_sum(Lattice(10, 2, moves=(-1, 1)))) == pytest.approx(1.0)

    def test_path_building(self):
        path = build_path(Lattice(3, 1), (1, 0, 0))
        assert isinstance(path, Path) and path.end.x == 0.5
