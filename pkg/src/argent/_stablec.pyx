# cython: boundscheck=False, wraparound=False
"""Compiled bitmask kernels for stable-extension enumeration.

Same contract and same pruned depth-first search as `argent._stablepy`:
attacker_masks[y] is the bitmask of arguments attacking y; results are subset
masks in ascending order.  Branches die when the included members conflict or
an excluded member can no longer be attacked.
"""

MAX_ARGUMENTS = 22

ctypedef unsigned long long u64


cdef inline bint _leaf_stable(u64 chosen, u64 *att, int n) noexcept:
    cdef int y
    for y in range(n):
        if not (chosen >> y) & 1 and (att[y] & chosen) == 0:
            return False
    return True


cdef int _scan(attacker_masks, int n, list out, bint collect,
               u64 *acc, bint *found) except -1:
    """DFS over inclusion decisions; appends stable masks to `out` when
    `collect`, otherwise folds them into `acc`/`found`."""
    cdef u64 att[22]
    cdef u64 targets[22]
    cdef u64 future[23]
    cdef u64 stack_chosen[64]
    cdef int stack_i[64]
    cdef int top, i, y
    cdef u64 chosen, bit, full, m
    for y in range(n):
        att[y] = attacker_masks[y]
        targets[y] = 0
    for y in range(n):
        m = att[y]
        i = 0
        while m:
            if m & 1:
                targets[i] |= (<u64>1) << y
            m >>= 1
            i += 1
    full = ((<u64>1) << n) - 1
    for i in range(n + 1):
        future[i] = full & ~((((<u64>1) << i) << 1) - 1)
    top = 0
    stack_i[0] = 0
    stack_chosen[0] = 0
    while top >= 0:
        i = stack_i[top]
        chosen = stack_chosen[top]
        top -= 1
        if i == n:
            if _leaf_stable(chosen, att, n):
                if collect:
                    out.append(chosen)
                else:
                    acc[0] &= chosen
                    found[0] = True
                    if acc[0] == 0:
                        return 0
            continue
        bit = (<u64>1) << i
        # include branch pushed first so the exclude branch is explored first
        if (att[i] & bit) == 0 and ((att[i] | targets[i]) & chosen) == 0:
            top += 1
            stack_i[top] = i + 1
            stack_chosen[top] = chosen | bit
        if att[i] & (chosen | future[i]):
            top += 1
            stack_i[top] = i + 1
            stack_chosen[top] = chosen
    return 0


def stable_masks(attacker_masks, int n):
    cdef u64 acc = 0
    cdef bint found = False
    if n < 0 or n > 22:
        raise ValueError(f"argument count {n} outside supported range 0..22")
    if n == 0:
        return [0]
    out = []
    _scan(attacker_masks, n, out, True, &acc, &found)
    out.sort()
    return out


def acceptance_mask(attacker_masks, int n):
    cdef u64 acc
    cdef bint found = False
    if n < 0 or n > 22:
        raise ValueError(f"argument count {n} outside supported range 0..22")
    if n == 0:
        return 0, False
    acc = ((<u64>1) << n) - 1
    _scan(attacker_masks, n, [], False, &acc, &found)
    if not found:
        return ((<u64>1) << n) - 1, True
    return acc, False
