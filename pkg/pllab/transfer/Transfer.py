"""
The transfer: one jeu de taquin step on a standard tableau.

Entry 1 is deleted, the hole slides right or down into the smaller
neighbour until it reaches a corner, the corner is removed and every
entry is decremented.
"""

import logging

from pllab.PlLabException import DomainError
from pllab.young.Tableau import StandardTableau
from pllab.young.YoungUtils import covers_down

__all__ = ["transfer_step",
           "slide_path"]

log = logging.getLogger(__name__)


def slide_path(entries):
    """
    Slide a hole from (0,0) through entries (modified in place) and return
    the cells the hole visited, ending at the vacated corner.
    """
    r, c = 0, 0
    path = [(r, c)]
    while True:
        right = entries[r][c + 1] if c + 1 < len(entries[r]) else None
        down = entries[r + 1][c] if r + 1 < len(entries) and c < len(entries[r + 1]) else None
        if right is None and down is None:
            break
        if right is not None and down is not None:
            assert right != down, "equal neighbours {v} in a standard tableau".format(v=right)
            go_right = right < down
        else:
            go_right = right is not None
        if go_right:
            entries[r][c] = right
            c += 1
        else:
            entries[r][c] = down
            r += 1
        path.append((r, c))
    return path


def transfer_step(t):
    """Return the transfer of t, a tableau with one cell fewer."""
    if t.n <= 1:
        raise DomainError("The transfer needs n >= 2 cells, got {n}".format(n=t.n))
    entries = t.entries()
    r, c = slide_path(entries)[-1]
    entries[r].pop()
    if len(entries[r]) == 0:
        entries.pop()
    ret = StandardTableau.from_entries([[x - 1 for x in row] for row in entries])
    assert ret.shape in covers_down(t.shape), \
        "shape {a} is not a corner deletion of {b}".format(a=ret.shape, b=t.shape)
    return ret
