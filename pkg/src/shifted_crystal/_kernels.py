"""Hot word-level kernels on integer-coded letters.

Letters of the primed alphabet 1' < 1 < 2' < 2 < ... are coded as small ints:
k' -> 2k-1 and k -> 2k, so the natural int order is the letter order, the class
of a code c is (c+1)//2, and c is primed iff c is odd.  Two-letter-class words
(alphabet {1',1,2',2}) use codes 1..4.

Everything here works on plain tuples/lists of codes.  This module is the single
source for both backends: the build copies it to _kernels_c.py and compiles that
copy with Cython (typed via _kernels_c.pxd), so the two can never disagree.
"""

from .errors import IntegrityError


def canonicalize(codes):
    """Unprime the first occurrence of every letter class."""
    seen = 0
    out = []
    for c in codes:
        k = (c + 1) >> 1
        bit = 1 << k
        if not (seen & bit):
            seen |= bit
            if c & 1:
                c += 1
        out.append(c)
    return tuple(out)


def weight(codes, n=0):
    """Class counts (n1, ..., nN); n defaults to the largest class present."""
    if n <= 0:
        n = 0
        for c in codes:
            k = (c + 1) >> 1
            if k > n:
                n = k
    w = [0] * n
    for c in codes:
        w[((c + 1) >> 1) - 1] += 1
    return tuple(w)


def standardize(codes):
    """Standardization permutation (values 1..len).

    Letters are numbered from least to greatest; ties between equal letters are
    broken left to right for unprimed letters and right to left for primed ones,
    which makes the result independent of the choice of representative.
    """
    L = len(codes)
    if L == 0:
        return ()
    maxc = 0
    for c in codes:
        if c > maxc:
            maxc = c
    n = (maxc + 1) >> 1
    perm = [0] * L
    v = 1
    for k in range(1, n + 1):
        pc = 2 * k - 1
        i = L - 1
        while i >= 0:
            if codes[i] == pc:
                perm[i] = v
                v += 1
            i -= 1
        uc = 2 * k
        i = 0
        while i < L:
            if codes[i] == uc:
                perm[i] = v
                v += 1
            i += 1
    return tuple(perm)


def destandardize(perm, mu):
    """The unique word with standardization `perm` and weight `mu`, or None.

    For each class the positions of its standardization values must split into a
    strictly decreasing prefix (the primed letters, numbered right to left) and a
    strictly increasing suffix (the unprimed ones).  The minimal valid split is
    assembled; when two splits are valid they must denote the same word, which is
    asserted.
    """
    L = len(perm)
    total = 0
    for m in mu:
        total += m
    if total != L:
        return None
    inv = [0] * (L + 1)
    for i in range(L):
        inv[perm[i]] = i
    out = [0] * L
    lo = 1
    for ki in range(len(mu)):
        cnt = mu[ki]
        if cnt == 0:
            continue
        p = [inv[lo + j] for j in range(cnt)]
        dmax = 1
        while dmax < cnt and p[dmax] < p[dmax - 1]:
            dmax += 1
        smin = cnt - 1
        while smin > 0 and p[smin - 1] < p[smin]:
            smin -= 1
        # p[:k] strictly decreases iff k <= dmax; p[k:] strictly increases iff k >= smin
        if smin > dmax:
            return None
        if dmax > smin:
            # two valid splits; the extra primed position must be the first
            # occurrence of the class, else the splits would name different words
            mn = p[0]
            for q in p:
                if q < mn:
                    mn = q
            if p[smin] != mn:
                raise IntegrityError("destandardize: ambiguous split is not prime-toggle equivalent")
        k = smin
        for j in range(k):
            out[p[j]] = 2 * ki + 1
        for j in range(k, cnt):
            out[p[j]] = 2 * ki + 2
        lo += cnt
    return canonicalize(out)


def representatives(codes):
    """All prime-toggles of the first occurrence of each class."""
    L = len(codes)
    firsts = []
    seen = 0
    for i in range(L):
        k = (codes[i] + 1) >> 1
        bit = 1 << k
        if not (seen & bit):
            seen |= bit
            firsts.append(i)
    base = list(codes)
    reps = [tuple(base)]
    m = len(firsts)
    for mask in range(1, 1 << m):
        v = base[:]
        for j in range(m):
            if mask & (1 << j):
                i = firsts[j]
                c = v[i]
                v[i] = c + 1 if c & 1 else c - 1
        reps.append(tuple(v))
    return reps


def restrict(codes, i):
    """Subword of classes {i, i+1} relabeled to {1, 2}, with its positions."""
    lo = 2 * i - 1
    hi = 2 * i + 2
    shift = 2 * (i - 1)
    sub = []
    pos = []
    for j in range(len(codes)):
        c = codes[j]
        if lo <= c <= hi:
            sub.append(c - shift)
            pos.append(j)
    return tuple(sub), tuple(pos)


def walk_endpoint(codes):
    """Endpoint of the first-quadrant lattice walk of a {1',1,2',2} word.

    On either axis class 1 steps East and class 2 steps North; in the interior
    1 steps South, 1' East, 2 North and 2' West.
    """
    x = 0
    y = 0
    for c in codes:
        if c <= 2:
            if y == 0 or x == 0:
                x += 1
            elif c == 2:
                y -= 1
            else:
                x += 1
        else:
            if y == 0 or x == 0:
                y += 1
            elif c == 4:
                y += 1
            else:
                x -= 1
    return x, y


def walk_points(codes):
    """All walk locations, from (0,0) through the endpoint (length len+1)."""
    x = 0
    y = 0
    pts = [(0, 0)]
    for c in codes:
        if c <= 2:
            if y == 0 or x == 0:
                x += 1
            elif c == 2:
                y -= 1
            else:
                x += 1
        else:
            if y == 0 or x == 0:
                y += 1
            elif c == 4:
                y += 1
            else:
                x -= 1
        pts.append((x, y))
    return pts


def f_prime(codes):
    """Primed lowering operator: destandardize at weight shifted by (-1,+1)."""
    n1 = 0
    n2 = 0
    for c in codes:
        if c <= 2:
            n1 += 1
        else:
            n2 += 1
    if n1 == 0:
        return None
    return destandardize(standardize(codes), (n1 - 1, n2 + 1))


def e_prime(codes):
    """Primed raising operator: destandardize at weight shifted by (+1,-1)."""
    n1 = 0
    n2 = 0
    for c in codes:
        if c <= 2:
            n1 += 1
        else:
            n2 += 1
    if n2 == 0:
        return None
    return destandardize(standardize(codes), (n1 + 1, n2 - 1))


def critical_f(codes):
    """All F-critical substring matches over all representatives.

    Returns (start, length, kind, representative, x, y) tuples, kind in 1..5,
    (x, y) the walk location just before the start.  The five kinds:

      1: u = 1(1')*2' -> 2'(1')*2   at y=0, or at y=1 with x>=1
      2: u = 1(2)*1'  -> 2'(2)*1    at x=0, or at x=1 with y>=1
      3: u = 1        -> 2          at y=0
      4: u = 1'       -> 2'         at x=0
      5: u = 1 or 2'  -> undefined  at x=1 with y>=1
    """
    out = []
    for rep in representatives(codes):
        L = len(rep)
        x = 0
        y = 0
        for k in range(L):
            c = rep[k]
            if y == 0:
                if c == 2:
                    out.append((k, 1, 3, rep, x, y))
                    j = k + 1
                    while j < L and rep[j] == 1:
                        j += 1
                    if j < L and rep[j] == 3:
                        out.append((k, j - k + 1, 1, rep, x, y))
            elif y == 1 and x >= 1:
                if c == 2:
                    j = k + 1
                    while j < L and rep[j] == 1:
                        j += 1
                    if j < L and rep[j] == 3:
                        out.append((k, j - k + 1, 1, rep, x, y))
            if x == 0:
                if c == 1:
                    out.append((k, 1, 4, rep, x, y))
                elif c == 2:
                    j = k + 1
                    while j < L and rep[j] == 4:
                        j += 1
                    if j < L and rep[j] == 1:
                        out.append((k, j - k + 1, 2, rep, x, y))
            elif x == 1 and y >= 1:
                if c == 2:
                    out.append((k, 1, 5, rep, x, y))
                    j = k + 1
                    while j < L and rep[j] == 4:
                        j += 1
                    if j < L and rep[j] == 1:
                        out.append((k, j - k + 1, 2, rep, x, y))
                elif c == 3:
                    out.append((k, 1, 5, rep, x, y))
            if c <= 2:
                if y == 0 or x == 0:
                    x += 1
                elif c == 2:
                    y -= 1
                else:
                    x += 1
            else:
                if y == 0 or x == 0:
                    y += 1
                elif c == 4:
                    y += 1
                else:
                    x -= 1
    return out


def transform_f(start, length, kind, rep):
    """Rewrite the matched substring in its representative; None for kind 5."""
    if kind == 5:
        return None
    v = list(rep)
    if kind == 3:
        v[start] = 4
    elif kind == 4:
        v[start] = 3
    elif kind == 1:
        v[start] = 3
        v[start + length - 1] = 4
    else:
        v[start] = 3
        v[start + length - 1] = 2
    return canonicalize(v)


def apply_f(codes):
    """Unprimed lowering operator via the final F-critical substring."""
    ms = critical_f(codes)
    if not ms:
        return None
    bs = -1
    bl = -1
    for m in ms:
        if m[0] > bs or (m[0] == bs and m[1] > bl):
            bs = m[0]
            bl = m[1]
    res = None
    have = False
    seen5 = False
    for m in ms:
        if m[0] == bs and m[1] == bl:
            if m[2] == 5:
                seen5 = True
                continue
            r = transform_f(m[0], m[1], m[2], m[3])
            if not have:
                res = r
                have = True
            elif res != r:
                raise IntegrityError("lowering operator: tied final matches disagree")
    if seen5 and have:
        raise IntegrityError("lowering operator: kind 5 tied with a defined kind")
    if seen5:
        return None
    return res


def flip(codes):
    """The raising/lowering involution 1<->2', 1'<->2 (c -> 5-c)."""
    out = []
    for c in codes:
        out.append(5 - c)
    return tuple(out)


def critical_e(codes):
    """E-critical matches: F-critical matches of the flipped word, mapped back.

    The raising table is the image of the lowering table under exchanging
    1 <-> 2, primed <-> unprimed and x <-> y, so kinds pair up 1E..5E with
    1F..5F and locations come back coordinate-swapped.
    """
    ms = critical_f(canonicalize(flip(codes)))
    out = []
    for m in ms:
        out.append((m[0], m[1], m[2], flip(m[3]), m[5], m[4]))
    return out


def apply_e(codes):
    """Unprimed raising operator, partial inverse of apply_f."""
    r = apply_f(canonicalize(flip(codes)))
    if r is None:
        return None
    return canonicalize(flip(r))


def is_ballot(codes, n):
    """True iff every class-pair walk (i, i+1), i < n, ends on the x-axis."""
    for i in range(1, n):
        lo = 2 * i - 1
        hi = lo + 3
        x = 0
        y = 0
        for c in codes:
            if c < lo or c > hi:
                continue
            cc = c - lo + 1
            if cc <= 2:
                if y == 0 or x == 0:
                    x += 1
                elif cc == 2:
                    y -= 1
                else:
                    x += 1
            else:
                if y == 0 or x == 0:
                    y += 1
                elif cc == 4:
                    y += 1
                else:
                    x -= 1
        if y != 0:
            return False
    return True
