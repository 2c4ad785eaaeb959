"""Pure-Python normal-form kernel.

Operates purely on element indices into a tabulated Weyl group (see
``weyl.WeylTable``). ``braidquiver._nfcore_c`` is the compiled twin with
the same interface; ``garside`` picks one at import time.

Conventions: index 0 is the identity; ``rm``/``lm`` are flat ``size*n``
multiplication tables; ``rd``/``ld`` are descent bitmasks; ``tau`` is
conjugation by the longest element; letters are signed 1-based generator
numbers.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def _repair(fs, j, n, rm, lm, rd, ld):
    """Left-weight the factor pair at positions j, j+1. True if changed."""
    a = fs[j]
    b = fs[j + 1]
    need = ld[b] & ~rd[a]
    if not need:
        return False
    while need:
        i = (need & -need).bit_length() - 1
        a = rm[a * n + i]
        b = lm[b * n + i]
        need = ld[b] & ~rd[a]
    fs[j] = a
    fs[j + 1] = b
    return True


def _comb_back(fs, n, rm, lm, rd, ld):
    j = len(fs) - 2
    while j >= 0 and _repair(fs, j, n, rm, lm, rd, ld):
        j -= 1


def _fixpoint(fs, n, rm, lm, rd, ld):
    changed = True
    while changed:
        changed = False
        for j in range(len(fs) - 2, -1, -1):
            if _repair(fs, j, n, rm, lm, rd, ld):
                changed = True


def normal_form_core(p, factors, letters, n, rm, lm, rd, ld, tau, gen, w0_gen, w0):
    """Multiply ``delta^p * factors`` by the given letters and normalise.

    Returns ``(delta_power, factor_indices)`` with no identity factors,
    no longest-element factors, and every adjacent pair left-weighted.
    """
    fs = list(factors)
    for letter in letters:
        if letter > 0:
            fs.append(gen[letter - 1])
        else:
            # x * s^-1 = delta^-1 * tau(x) * lift(w0 s)
            p -= 1
            for idx in range(len(fs)):
                fs[idx] = tau[fs[idx]]
            lifted = w0_gen[-letter - 1]
            if lifted == 0:
                continue
            fs.append(lifted)
        _comb_back(fs, n, rm, lm, rd, ld)
    _fixpoint(fs, n, rm, lm, rd, ld)
    lead = 0
    while lead < len(fs) and fs[lead] == w0:
        lead += 1
    p += lead
    return p, [x for x in fs[lead:] if x != 0]


def is_left_weighted(factors, n, rd, ld):
    """Structural check used by the acceptance suite."""
    for a, b in zip(factors, factors[1:]):
        if ld[b] & ~rd[a]:
            return False
    return True
