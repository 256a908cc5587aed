"""Small graph corpus shared by the property tests."""

from functools import lru_cache

from planecolor.enumerator import GenConstraints, enumerate


@lru_cache(maxsize=None)
def small_graphs():
    out = []
    for L in (3, 4, 5, 6):
        out.extend(enumerate(GenConstraints(L, min(L + 3, 9), 1, 5)))
        out.extend(enumerate(GenConstraints(L, L + 2, 1, 4)))
    return tuple(out)
