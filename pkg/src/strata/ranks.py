"""Extended ranks: natural numbers plus a single infinite value.

Ranks are plain ints except for the distinguished value ``INF``
(``math.inf``), which compares strictly greater than every natural number
and absorbs addition (``1 + INF == INF``). No other float ever appears in
a rank position.
"""

import math

Rank = int | float

INF: Rank = math.inf


def is_finite(rank: Rank) -> bool:
    return rank != INF


def rank_str(rank: Rank) -> str:
    """Render a rank for text output; infinity prints as the literal ``inf``."""
    return "inf" if rank == INF else str(int(rank))


def rank_json(rank: Rank) -> int | str:
    """JSON value for a rank: an integer, or the string ``"inf"``."""
    return "inf" if rank == INF else int(rank)
