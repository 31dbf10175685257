"""Shared independent oracles for the test suite."""

from itertools import permutations


def quadrangle_criterion(square):
    """Frolov's quadrangle criterion: a latin square is isotopic to a group
    table iff whenever two quadrangles agree in three cells they agree in
    the fourth.  Exhaustive, only sane for small n."""
    n = len(square)
    rows = range(n)
    for a1 in rows:
        for a2 in rows:
            for d1 in rows:
                for d2 in rows:
                    for b1 in rows:
                        for b2 in rows:
                            if square[a1][b1] != square[a2][b2]:
                                continue
                            if square[d1][b1] != square[d2][b2]:
                                continue
                            for c1 in rows:
                                for c2 in rows:
                                    if square[a1][c1] != square[a2][c2]:
                                        continue
                                    if square[d1][c1] != square[d2][c2]:
                                        return False
    return True


def count_transversals_brute(square):
    """Transversal count by scanning all column permutations."""
    n = len(square)
    count = 0
    for perm in permutations(range(n)):
        symbols = {square[i][perm[i]] for i in range(n)}
        if len(symbols) == n:
            count += 1
    return count
