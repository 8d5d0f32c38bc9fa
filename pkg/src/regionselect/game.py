"""The Region Select game: moves, solvability, constrained region sets.

Selecting a region toggles every lamp with an odd corner count on that
region, so the reachable lamp states are the coset of the initial state
under the incidence matrix column space.  All witnesses returned here
are re-verified by direct application before they leave the module.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .board import LampBoard, region_adjacency
from .gf2 import SolveOutcome, bits_to_indices, indices_to_bits, solve, solve_constrained


class GameError(ValueError):
    pass


@dataclass(frozen=True)
class GameInstance:
    """A board plus the multiset of regions played so far."""

    board: LampBoard
    history: tuple[int, ...] = ()

    @property
    def lamps(self) -> int:
        played = 0
        for r in self.history:
            played ^= 1 << r
        return self.board.lamps ^ self.board.matrix.mul_vec(played)

    @property
    def won(self) -> bool:
        return self.lamps == self.board.all_on()


@dataclass(frozen=True)
class GameSolution:
    """Region set lighting all lamps, or the row certificate that none exists."""

    solvable: bool
    regions: Optional[int] = None
    certificate: Optional[int] = None

    def region_ids(self) -> tuple[int, ...]:
        return bits_to_indices(self.regions) if self.regions is not None else ()


def new_game(board: LampBoard) -> GameInstance:
    return GameInstance(board=board)


def apply_rcc(game: GameInstance, region: int) -> GameInstance:
    if not 0 <= region < game.board.region_count:
        raise GameError(f"unknown region id {region}")
    return replace(game, history=game.history + (region,))


def _verify(game: GameInstance, region_mask: int, target_toggle: int) -> None:
    if game.board.matrix.mul_vec(region_mask) != target_toggle:
        raise AssertionError("witness failed re-verification by application")


def solve_game(game: GameInstance) -> GameSolution:
    """Find region selections turning every lamp ON from the current state."""
    target = game.lamps ^ game.board.all_on()
    out = solve(game.board.matrix, target)
    if not out.solved:
        return GameSolution(solvable=False, certificate=out.certificate)
    _verify(game, out.particular, target)
    return GameSolution(solvable=True, regions=out.particular)


def changeable(game: GameInstance, site: int) -> tuple[bool, Optional[int], Optional[int]]:
    """Can RCCs toggle exactly this lamp?  Returns (yes, witness, certificate)."""
    if not 0 <= site < game.board.site_count:
        raise GameError(f"unknown lamp site {site}")
    out = solve(game.board.matrix, 1 << site)
    if out.solved:
        _verify(game, out.particular, 1 << site)
        return True, out.particular, None
    return False, None, out.certificate


def ineffective_sets(game: GameInstance) -> tuple[int, ...]:
    """Basis of the region sets whose combined selection changes nothing."""
    out = solve(game.board.matrix, 0)
    for vec in out.kernel_basis:
        _verify(game, vec, 0)
    return out.kernel_basis


def _nonzero_solution(out: SolveOutcome) -> Optional[int]:
    if not out.solved:
        return None
    if out.particular != 0:
        return out.particular
    for vec in out.kernel_basis:
        if vec:
            return vec
    return None


def constrained_changing_set(
    game: GameInstance,
    site: int,
    prohibited: Iterable[int] = (),
    compulsory: Iterable[int] = (),
) -> Optional[int]:
    """Region set toggling exactly ``site`` under region constraints."""
    pro = indices_to_bits(prohibited)
    com = indices_to_bits(compulsory)
    if pro & com:
        raise GameError("prohibited and compulsory regions overlap")
    out = solve_constrained(
        game.board.matrix, 1 << site,
        forced_one=bits_to_indices(com), forced_zero=bits_to_indices(pro),
    )
    if not out.solved:
        return None
    witness = out.particular
    _verify(game, witness, 1 << site)
    if witness & pro or (witness & com) != com:
        raise AssertionError("constraint violated by witness")
    return witness


def constrained_ineffective_set(
    game: GameInstance,
    prohibited: Iterable[int] = (),
    compulsory: Iterable[int] = (),
) -> Optional[int]:
    """An ineffective region set honoring the constraints.

    Prefers a nonempty set; the empty set is returned only when it is
    the sole solution (no compulsory regions, trivial kernel).
    """
    pro = indices_to_bits(prohibited)
    com = indices_to_bits(compulsory)
    if pro & com:
        raise GameError("prohibited and compulsory regions overlap")
    out = solve_constrained(
        game.board.matrix, 0,
        forced_one=bits_to_indices(com), forced_zero=bits_to_indices(pro),
    )
    if not out.solved:
        return None
    witness = _nonzero_solution(out)
    if witness is None:
        witness = 0
    _verify(game, witness, 0)
    if witness & pro or (witness & com) != com:
        raise AssertionError("constraint violated by witness")
    return witness


def ineffective_by_symmetric_difference(
    game: GameInstance, include_region: int, avoid_region: int
) -> int:
    """Build an ineffective set containing one region and avoiding an
    adjacent one constructively.

    Start from the included region alone; for every lamp it toggles,
    symmetric-difference a changing set for that lamp avoiding both
    regions.  The result cancels every toggle, stays ineffective, keeps
    the included region and never uses the avoided one.
    """
    if include_region == avoid_region:
        raise GameError("regions must differ")
    adj = region_adjacency(game.board)
    pair = (min(include_region, avoid_region), max(include_region, avoid_region))
    if pair not in adj:
        raise GameError("construction requires adjacent regions")
    acc = 1 << include_region
    toggled = game.board.matrix.mul_vec(acc)
    for site in bits_to_indices(toggled):
        piece = constrained_changing_set(
            game, site, prohibited=(include_region, avoid_region)
        )
        if piece is None:
            raise GameError(f"no changing set for lamp {site} avoiding both regions")
        acc ^= piece
    _verify(game, acc, 0)
    if not acc & (1 << include_region) or acc & (1 << avoid_region):
        raise AssertionError("construction lost its region constraints")
    return acc


def hint(game: GameInstance) -> Optional[int]:
    """One region from a verified solving set, or None when unsolvable."""
    sol = solve_game(game)
    if not sol.solvable:
        return None
    ids = sol.region_ids()
    return ids[0] if ids else None
