"""Lexicographically least selection around a cycle with distance-1 and distance-2 constraints."""

from __future__ import annotations

from collections.abc import Callable, Sequence

PairOK = Callable[[int, int, int], bool]


def cyclic_select(
    options: Sequence[Sequence[int]],
    near_ok: PairOK,
    far_ok: PairOK,
) -> tuple[int, ...] | None:
    """Pick one value per position ``0..k-1`` (``k >= 5``), cyclically.

    ``near_ok(i, a, b)`` must hold for the values at positions ``i`` and
    ``i+1``; ``far_ok(i, a, c)`` for positions ``i`` and ``i+2`` (indices
    mod ``k``). Returns the lexicographically least valid tuple, or ``None``.

    The search fixes the first two values, then runs a backward feasibility
    table over states ``(value at j-1, value at j)``; the wrap-around
    constraints are checked when the last two positions are chosen.
    """
    k = len(options)
    if k < 5:
        raise ValueError("cyclic_select needs at least five positions")
    opts = [sorted(set(o)) for o in options]

    for x0 in opts[0]:
        for x1 in opts[1]:
            if not near_ok(0, x0, x1):
                continue

            def valid(j: int, a: int, b: int, c: int) -> bool:
                # c goes at position j, b at j-1, a at j-2
                if not (near_ok(j - 1, b, c) and far_ok(j - 2, a, c)):
                    return False
                if j == k - 2 and not far_ok(k - 2, c, x0):
                    return False
                if j == k - 1 and not (near_ok(k - 1, c, x0) and far_ok(k - 1, c, x1)):
                    return False
                return True

            # good[j][(b, c)]: positions j+1..k-1 can be completed after
            # choosing b at j-1 and c at j
            good: list[dict[tuple[int, int], bool]] = [{} for _ in range(k)]
            for b in opts[k - 2]:
                for c in opts[k - 1]:
                    good[k - 1][(b, c)] = True
            for j in range(k - 2, 1, -1):
                nxt = good[j + 1]
                for b in opts[j - 1]:
                    for c in opts[j]:
                        good[j][(b, c)] = any(valid(j + 1, b, c, d) and nxt[(c, d)] for d in opts[j + 1])

            choice = [x0, x1]
            for j in range(2, k):
                a, b = choice[-2], choice[-1]
                for c in opts[j]:
                    if valid(j, a, b, c) and good[j][(b, c)]:
                        choice.append(c)
                        break
                else:
                    break
            if len(choice) == k:
                return tuple(choice)
    return None

