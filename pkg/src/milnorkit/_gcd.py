"""Heuristic polynomial gcd over packed integer exponent dicts.

Polynomials arrive as dicts mapping packed exponent keys (one
fixed-width bit field per variable, variable 1 highest, so
lexicographic order is plain integer order) to nonzero integer
coefficients.  The gcd is computed by integer evaluation at one large
point per variable and balanced-digit reconstruction, then verified by
exact trial division, so a returned divisor is always genuine; every
failure path returns None and the caller simply skips an optional
cancellation.

A modular projection screen runs first: each shared variable is
projected to a univariate image mod a word-size prime, and a constant
projected gcd in every variable marks the pair trivial.  The screen's
failure modes cost time, never correctness.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

_EXP_BITS = 20
_EXP_MASK = (1 << _EXP_BITS) - 1
# top bit of each field; degrees stay far below it, and it turns
# exponent divisibility into one subtract-and-mask
_GUARD_BIT = 1 << (_EXP_BITS - 1)

_GROW_NUM = 73794
_GROW_DEN = 27011
_MAX_TRIES = 6
_BIT_BUDGET = 2_000_000

_GEOM_CACHE: dict = {}


def geometry(r: int) -> tuple:
    """(shifts, guards) for r packed fields, variable 1 most significant."""
    got = _GEOM_CACHE.get(r)
    if got is None:
        shifts = tuple(_EXP_BITS * (r - 1 - j) for j in range(r))
        guards = 0
        for s in shifts:
            guards |= _GUARD_BIT << s
        got = (shifts, guards)
        _GEOM_CACHE[r] = got
    return got


def pack_exponents(e, shifts) -> int:
    key = 0
    for x, s in zip(e, shifts):
        key |= x << s
    return key


def unpack_exponents(key: int, shifts) -> tuple:
    return tuple((key >> s) & _EXP_MASK for s in shifts)


def divexact_int(a: dict, b: dict, guards: int):
    """a / b over the integers for packed-key dicts, or None.

    Both operands are primitive (content 1), so by Gauss's lemma an
    exact quotient is primitive too and every intermediate coefficient
    quotient must come out exact; any failed division step or exponent
    underflow aborts.
    """
    eb = max(b)
    cb = b[eb]
    rem = dict(a)
    q: dict = {}
    steps = len(a) * (len(b) + 1) + 1
    while rem:
        steps -= 1
        if steps < 0:
            return None
        er = max(rem)
        cr = rem[er]
        if cr % cb:
            return None
        if ((er | guards) - eb) & guards != guards:
            return None
        de = er - eb
        qc = cr // cb
        q[de] = qc
        for e2, c2 in b.items():
            e3 = e2 + de
            cur = rem.get(e3)
            if cur is None:
                rem[e3] = -qc * c2
            else:
                s = cur - qc * c2
                if s:
                    rem[e3] = s
                else:
                    del rem[e3]
    return q if q else None


def _clear_denoms(a: dict) -> dict:
    den = 1
    for c in a.values():
        den = den * c.denominator // gcd(den, c.denominator)
    out = {e: int(c * den) for e, c in a.items()}
    g = 0
    for c in out.values():
        g = gcd(g, c)
        if g == 1:
            return out
    if g > 1:
        out = {e: c // g for e, c in out.items()}
    return out


def _primitive(a: dict) -> dict:
    g = 0
    for c in a.values():
        g = gcd(g, c)
        if g == 1:
            return a
    if g > 1:
        return {e: c // g for e, c in a.items()}
    return a


def _norm_inf(a: dict) -> int:
    return max(abs(c) for c in a.values())


def _eval_at(a: dict, sh: int, xi: int) -> dict:
    """Substitute xi for the variable whose field starts at bit sh."""
    dv = 0
    for e in a:
        k = (e >> sh) & _EXP_MASK
        if k > dv:
            dv = k
    pows = [1] * (dv + 1)
    for k in range(1, dv + 1):
        pows[k] = pows[k - 1] * xi
    out: dict = {}
    for e, c in a.items():
        k = (e >> sh) & _EXP_MASK
        if k:
            e2 = e - (k << sh)
            t = c * pows[k]
        else:
            e2 = e
            t = c
        cur = out.get(e2)
        out[e2] = t if cur is None else cur + t
    return {e: c for e, c in out.items() if c}


def _lift(low: dict, sh: int, xi: int) -> dict:
    """Reconstruct the variable at bit sh from balanced xi digits."""
    out: dict = {}
    cur = low
    k = 0
    half = xi // 2
    while cur:
        nxt: dict = {}
        for e, c in cur.items():
            d = c % xi
            if d > half:
                d -= xi
            if d:
                out[e + (k << sh)] = d
            q = (c - d) // xi
            if q:
                nxt[e] = nxt.get(e, 0) + q
        cur = {e: c for e, c in nxt.items() if c}
        k += 1
    return out


def _is_const(g: dict) -> bool:
    return len(g) == 1 and 0 in g


def _heu_raw(a: dict, b: dict, shs, boost: int):
    """Unverified gcd candidate by evaluation and balanced-digit lift.

    Intermediate results keep their integer content: a constant at an
    inner level still encodes the deeper variables' contribution, so
    nothing is normalized until the caller takes the primitive part of
    the fully lifted candidate.
    """
    if not shs:
        e = next(iter(a))
        return {e: gcd(abs(a[e]), abs(b[e]))}
    sh = shs[-1]
    xi = (2 * min(_norm_inf(a), _norm_inf(b)) + 29) * boost
    dv = 0
    for e in a:
        k = (e >> sh) & _EXP_MASK
        if k > dv:
            dv = k
    for _ in range(_MAX_TRIES):
        if xi.bit_length() * (dv + 1) > _BIT_BUDGET:
            return None
        ae = _eval_at(a, sh, xi)
        be = _eval_at(b, sh, xi)
        if ae and be:
            low = _heu_raw(ae, be, shs[:-1], boost)
            if low is not None:
                g = _lift(low, sh, xi)
                if g:
                    return g
        xi = xi * _GROW_NUM // _GROW_DEN + 1
    return None


def _heu(a: dict, b: dict, shs, guards: int):
    for boost in (1, 97):
        g = _heu_raw(a, b, shs, boost)
        if g is None:
            continue
        g = _primitive(g)
        if _is_const(g):
            # unverifiable triviality claim; a miss only skips an
            # optional cancellation
            return {0: 1}
        if (
            divexact_int(a, g, guards) is not None
            and divexact_int(b, g, guards) is not None
        ):
            return g
    return None


_SCREEN_P = (1 << 61) - 1
_SCREEN_RHO = (3, 5, 7, 11, 17, 19, 23, 29, 31, 37, 41, 43)


def _degrees(d: dict, shifts) -> list:
    degs = [0] * len(shifts)
    for e in d:
        for j, s in enumerate(shifts):
            k = (e >> s) & _EXP_MASK
            if k > degs[j]:
                degs[j] = k
    return degs


def _proj_univariate(d: dict, v: int, degs, shifts, p: int) -> list:
    """Dense little-endian image of d mod p, univariate in variable v,
    the other variables evaluated at fixed small points."""
    tabs = [None] * len(shifts)
    for j, s in enumerate(shifts):
        if j == v or not degs[j]:
            continue
        rho = _SCREEN_RHO[j % len(_SCREEN_RHO)]
        row = [1] * (degs[j] + 1)
        acc = 1
        for k in range(1, degs[j] + 1):
            acc = acc * rho % p
            row[k] = acc
        tabs[j] = row
    sv = shifts[v]
    out = [0] * (degs[v] + 1)
    for e, c in d.items():
        x = c % p
        for j, s in enumerate(shifts):
            if j != v:
                k = (e >> s) & _EXP_MASK
                if k:
                    x = x * tabs[j][k] % p
        kv = (e >> sv) & _EXP_MASK
        out[kv] = (out[kv] + x) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mod(A: list, B: list, p: int) -> list:
    """Scalar multiple of the remainder of dense little-endian A by B
    mod p; B is nonzero.  Pseudo-division sidesteps modular inverses,
    and gcd chains do not care about the scalar."""
    db = len(B) - 1
    if len(A) - 1 < db:
        return A
    A = A[:]
    lb = B[-1]
    da = len(A) - 1
    while da >= db:
        c = A[da]
        if c:
            k = da - db
            if lb != 1:
                for i in range(da):
                    A[i] = A[i] * lb % p
            for i in range(db):
                A[i + k] = (A[i + k] - c * B[i]) % p
        da -= 1
    del A[db:]
    while A and A[-1] == 0:
        A.pop()
    return A


def _gcd_deg_mod(A: list, B: list, p: int) -> int:
    while B:
        A, B = B, _poly_mod(A, B, p)
    return len(A) - 1


def _screen_says_trivial(a, b, degs_a, degs_b, shifts) -> bool:
    """Per-variable modular projections as a trivial-gcd proof.

    A common factor divides both projected images, and it keeps its
    degree in v whenever one input's projection keeps full v-degree
    (the factor's leading coefficient divides the input's, so it
    cannot vanish alone).  Under that guard a constant projected gcd
    in every shared variable proves the gcd trivial; anything
    inconclusive returns False and costs only the follow-up work.
    """
    p = _SCREEN_P
    for v in range(len(shifts)):
        if not degs_a[v] or not degs_b[v]:
            continue
        A = _proj_univariate(a, v, degs_a, shifts, p)
        B = _proj_univariate(b, v, degs_b, shifts, p)
        if not A or not B:
            return False
        if len(A) - 1 != degs_a[v] and len(B) - 1 != degs_b[v]:
            return False  # leading coefficient lost: no conclusion in v
        if len(A) == 1 or len(B) == 1:
            continue
        if _gcd_deg_mod(A, B, p) > 0:
            return False
    return True


def _uni_gcd_monic(A: list, B: list, p: int) -> list:
    """Monic gcd of dense little-endian A, B mod p (both nonzero)."""
    while B:
        A, B = B, _poly_mod(A, B, p)
    inv = pow(A[-1], p - 2, p)
    return [c * inv % p for c in A]


def _balanced_lift(c: int, p: int) -> int:
    return c - p if c > p // 2 else c


def _lc_content(d: dict, sv: int, dv: int) -> int:
    """Integer content of the coefficient of the top power of the
    variable at bit sv."""
    g = 0
    for e, c in d.items():
        if (e >> sv) & _EXP_MASK == dv:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


def _uni_candidate(a, b, v, degs_a, degs_b, shifts, p):
    """Single-prime gcd candidate when one shared variable remains.

    Returns a packed integer dict, {0: 1} for a proven-trivial gcd, or
    None when the projection was unlucky.  The proof direction is one
    sided: a specialization can only raise the gcd degree as long as
    one input keeps its full degree, so a constant image certifies
    triviality while a positive-degree image stays a mere candidate.
    """
    A = _proj_univariate(a, v, degs_a, shifts, p)
    B = _proj_univariate(b, v, degs_b, shifts, p)
    if not A or not B:
        return None
    if len(A) - 1 != degs_a[v] and len(B) - 1 != degs_b[v]:
        return None
    g = _uni_gcd_monic(A, B, p)
    if len(g) == 1:
        return {0: 1}
    sv = shifts[v]
    scale = gcd(_lc_content(a, sv, degs_a[v]), _lc_content(b, sv, degs_b[v]))
    sm = scale % p
    out: dict = {}
    for k, c in enumerate(g):
        if c:
            out[k << sv] = _balanced_lift(c * sm % p, p)
    return _primitive(out)


def _eval_u(M: list, t: int, p: int) -> list:
    """Collapse the u rows of a dense matrix at u = t (little-endian in
    v), trailing zeros stripped."""
    cols = len(M[0])
    out = [0] * cols
    for row in reversed(M):
        for j in range(cols):
            out[j] = (out[j] * t + row[j]) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _proj_matrix(d, u, v, degs, shifts, p):
    """Dense (deg_u+1) x (deg_v+1) image of d mod p with every other
    variable evaluated at its fixed small point."""
    tabs = [None] * len(shifts)
    for j, s in enumerate(shifts):
        if j == u or j == v or not degs[j]:
            continue
        rho = _SCREEN_RHO[j % len(_SCREEN_RHO)]
        row = [1] * (degs[j] + 1)
        acc = 1
        for k in range(1, degs[j] + 1):
            acc = acc * rho % p
            row[k] = acc
        tabs[j] = row
    su, sv = shifts[u], shifts[v]
    M = [[0] * (degs[v] + 1) for _ in range(degs[u] + 1)]
    for e, c in d.items():
        x = c % p
        for j, s in enumerate(shifts):
            if j != u and j != v:
                k = (e >> s) & _EXP_MASK
                if k:
                    x = x * tabs[j][k] % p
        row = M[(e >> su) & _EXP_MASK]
        kv = (e >> sv) & _EXP_MASK
        row[kv] = (row[kv] + x) % p
    return M


_BIVAR_EXTRA_POINTS = 30


def _mul_packed(x: dict, y: dict) -> dict:
    out: dict = {}
    for ex, cx in x.items():
        for ey, cy in y.items():
            e = ex + ey
            out[e] = out.get(e, 0) + cx * cy
    return {e: c for e, c in out.items() if c}


def _col_content_deg(M: list, p: int) -> int:
    """Degree of the gcd of the nonzero v-columns of a dense projected
    matrix; 0 means the content wrt v is constant under this
    projection."""
    g: list = []
    for j in range(len(M[0])):
        col = [row[j] for row in M]
        while col and col[-1] == 0:
            col.pop()
        if not col:
            continue
        if len(col) == 1:
            return 0
        g = _uni_gcd_monic(col, g, p) if g else col
        if len(g) == 1:
            return 0
    return len(g) - 1 if g else 0


def _content_wrt(d: dict, sv: int, r: int):
    """gcd of the coefficients of d grouped by the power of the
    variable at bit sv, as a primitive packed dict without that
    variable; None when a recursive gcd gives up."""
    sl: dict = {}
    for e, c in d.items():
        k = (e >> sv) & _EXP_MASK
        grp = sl.get(k)
        if grp is None:
            grp = sl[k] = {}
        grp[e - (k << sv)] = c
    it = iter(sl.values())
    g = _primitive(next(it))
    for s in it:
        if len(g) == 1 and 0 in g:
            return {0: 1}
        g = poly_gcd_int(g, _primitive(s), r)
        if g is None:
            return None
    return g


def _bivar_candidate(a, b, u, v, degs_a, degs_b, shifts, p):
    """Single-prime dense-interpolation gcd candidate in two shared
    variables; u is interpolated, v carries the euclidean algorithm.

    The leading-coefficient mismatch is handled the standard way: each
    monic image in v is rescaled by the image of the projected leading
    coefficients' gcd, which the true leading coefficient divides, so
    the interpolated object is a polynomial multiple of the gcd whose
    u-content is stripped afterwards.  Unlucky anything returns None;
    {0: 1} only comes back via a proven-constant image.
    """
    Ma = _proj_matrix(a, u, v, degs_a, shifts, p)
    Mb = _proj_matrix(b, u, v, degs_b, shifts, p)
    lcA = [row[degs_a[v]] for row in Ma]
    lcB = [row[degs_b[v]] for row in Mb]
    while lcA and lcA[-1] == 0:
        lcA.pop()
    while lcB and lcB[-1] == 0:
        lcB.pop()
    if not lcA or not lcB:
        return None
    gam = _uni_gcd_monic(lcA, lcB, p)
    npoints = len(gam) + min(degs_a[u], degs_b[u])
    ts: list = []
    dd: list = []
    dmin = None
    cols = None
    t = 0
    zero_run = 0
    budget = npoints + _BIVAR_EXTRA_POINTS
    while len(ts) < npoints:
        t += 1
        budget -= 1
        if budget < 0:
            return None
        ga = _eval_u(Ma, t, p)
        gb = _eval_u(Mb, t, p)
        if len(ga) - 1 != degs_a[v] and len(gb) - 1 != degs_b[v]:
            continue  # lost v-degree: cannot trust this image
        if not ga or not gb:
            continue
        gt = _uni_gcd_monic(ga, gb, p)
        dg = len(gt) - 1
        if dg == 0:
            # no v in the gcd; whatever is left lives in u alone
            return _uni_candidate(a, b, u, degs_a, degs_b, shifts, p)
        if dmin is None or dg < dmin:
            dmin = dg
            ts, dd = [], []
        elif dg > dmin:
            continue  # unlucky point, gcd image too big
        # scale the monic image and fold it into the Newton tableau;
        # the node-difference inverses come from one batched inversion
        s = _eval_poly(gam, t, p)
        if s == 0:
            continue
        vec = [c * s % p for c in gt]
        if cols is None:
            cols = dmin + 1
        vec += [0] * (cols - len(vec))
        if ts:
            pref = [1]
            for tk in ts:
                pref.append(pref[-1] * (t - tk) % p)
            inv_all = pow(pref[-1], p - 2, p)
            invs = [0] * len(ts)
            for k in range(len(ts) - 1, -1, -1):
                invs[k] = pref[k] * inv_all % p
                inv_all = inv_all * (t - ts[k]) % p
            for k in range(len(dd)):
                ik = invs[k]
                vec = [(x - y) * ik % p for x, y in zip(vec, dd[k])]
            # two stabilized points in a row end the collection early;
            # the division check still arbitrates
            if any(vec):
                zero_run = 0
            else:
                zero_run += 1
                if zero_run >= 2:
                    break
        ts.append(t)
        dd.append(vec)
    # expand the Newton form into dense u rows
    rows = [[0] * cols for _ in range(len(ts))]
    base = [1]
    for k in range(len(ts)):
        for i, bc in enumerate(base):
            if bc:
                row = rows[i]
                for j in range(cols):
                    x = dd[k][j]
                    if x:
                        row[j] = (row[j] + bc * x) % p
        base = [0] + base
        tk = ts[k]
        for i in range(len(base) - 1):
            base[i] = (base[i] - tk * base[i + 1]) % p
    # strip the u-content so only the primitive bivariate part lifts
    cont: list = []
    for j in range(cols):
        col = [rows[i][j] for i in range(len(rows))]
        while col and col[-1] == 0:
            col.pop()
        if col:
            cont = _uni_gcd_monic(col, cont, p) if cont else col
            if len(cont) == 1:
                cont = []
                break
    if cont:
        inv = pow(cont[-1], p - 2, p)
        cont = [c * inv % p for c in cont]
        rows = _matrix_div_u(rows, cont, p)
        if rows is None:
            return None
    su, sv = shifts[u], shifts[v]
    out: dict = {}
    for i, row in enumerate(rows):
        for j, c in enumerate(row):
            if c:
                out[(i << su) | (j << sv)] = _balanced_lift(c, p)
    if not out:
        return None
    pp = _primitive(out)
    # the interpolation only sees the part that is primitive with
    # respect to v; the factor shared by the v-coefficients comes from
    # an exact recursive gcd and multiplies back in.  The projected
    # matrices give a near-free screen: constant column gcds on either
    # side mean the exact content step can be skipped.
    if _col_content_deg(Ma, p) == 0 or _col_content_deg(Mb, p) == 0:
        return pp
    r = len(shifts)
    ca = _content_wrt(a, sv, r)
    if ca is None or (len(ca) == 1 and 0 in ca):
        return pp
    cb = _content_wrt(b, sv, r)
    if cb is None or (len(cb) == 1 and 0 in cb):
        return pp
    cont = poly_gcd_int(ca, cb, r)
    if cont is None or (len(cont) == 1 and 0 in cont):
        return pp
    return _mul_packed(cont, pp)


def _eval_poly(A: list, t: int, p: int) -> int:
    x = 0
    for c in reversed(A):
        x = (x * t + c) % p
    return x


def _matrix_div_u(rows: list, cont: list, p: int):
    """Divide each v-column of rows by the monic u-polynomial cont;
    None unless every division is exact."""
    dq = len(rows) - len(cont)
    if dq < 0:
        return None
    cols = len(rows[0])
    out = [[0] * cols for _ in range(dq + 1)]
    for j in range(cols):
        col = [rows[i][j] for i in range(len(rows))]
        q = [0] * (dq + 1)
        for i in range(len(col) - 1, len(cont) - 2, -1):
            c = col[i]
            if c:
                k = i - (len(cont) - 1)
                q[k] = c
                for idx, cc in enumerate(cont):
                    col[idx + k] = (col[idx + k] - c * cc) % p
        if any(col[: len(cont) - 1]):
            return None
        for i in range(dq + 1):
            out[i][j] = q[i]
    return out


def _modular_candidate(a, b, shared, degs_a, degs_b, shifts):
    p = _SCREEN_P
    if len(shared) == 1:
        return _uni_candidate(a, b, shared[0], degs_a, degs_b, shifts, p)
    u, v = shared
    # interpolate over the cheaper variable, run Euclid in the other
    if min(degs_a[u], degs_b[u]) > min(degs_a[v], degs_b[v]):
        u, v = v, u
    return _bivar_candidate(a, b, u, v, degs_a, degs_b, shifts, p)


def poly_gcd_int(a: dict, b: dict, r: int):
    """Verified gcd of nonzero primitive packed-key dicts.

    Returns a packed-key dict with positive lex-leading coefficient, or
    None when every route gave up.  A constant result is {0: 1}.

    One or two shared variables go through a single-prime modular
    computation whose candidates are verified by exact division; more
    shared variables, or an unlucky prime, fall back to integer
    evaluation (the candidates there are verified the same way, so a
    returned divisor is always genuine whichever route produced it).
    """
    shifts, guards = geometry(r)
    degs_a = _degrees(a, shifts)
    degs_b = _degrees(b, shifts)
    shared = [j for j in range(r) if degs_a[j] and degs_b[j]]
    # A common factor only involves variables both operands use.
    if not shared:
        return {0: 1}
    if len(a) == 1 or len(b) == 1:
        # against a monomial the gcd is the shared monomial part
        mono, other = (a, b) if len(a) == 1 else (b, a)
        e0 = next(iter(mono))
        out = 0
        for s in shifts:
            k0 = (e0 >> s) & _EXP_MASK
            if k0:
                km = min((e >> s) & _EXP_MASK for e in other)
                if km:
                    out |= (k0 if k0 < km else km) << s
        return {out: 1} if out else {0: 1}
    if _screen_says_trivial(a, b, degs_a, degs_b, shifts):
        return {0: 1}
    if len(shared) <= 2:
        g = _modular_candidate(a, b, shared, degs_a, degs_b, shifts)
        if g is not None:
            if len(g) == 1 and 0 in g:
                return {0: 1}
            if (
                divexact_int(a, g, guards) is not None
                and divexact_int(b, g, guards) is not None
            ):
                if g[max(g)] < 0:
                    g = {e: -c for e, c in g.items()}
                return g
    active = [s for j, s in enumerate(shifts) if degs_a[j] or degs_b[j]]
    g = _heu(a, b, active, guards)
    if g is None:
        return None
    if g[max(g)] < 0:
        g = {e: -c for e, c in g.items()}
    return g


def poly_divexact(a: dict, b: dict):
    """Exact quotient of Fraction-coefficient tuple-key dicts, or None.

    Convenience wrapper over the packed integer core; b must be
    nonzero.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    r = len(next(iter(a)))
    shifts, guards = geometry(r)
    pa = {pack_exponents(e, shifts): c for e, c in _scaled_ints(a).items()}
    pb = {pack_exponents(e, shifts): c for e, c in _scaled_ints(b).items()}
    la, lb = _lcm_den(a), _lcm_den(b)
    q = divexact_int(_primitive(pa), _primitive(pb), guards)
    if q is None:
        return None
    # reconstruct the rational scale: a = (ca/la) * pa', b likewise
    ca = _content(_scaled_ints(a))
    cb = _content(_scaled_ints(b))
    scale = Fraction(ca * lb, la * cb)
    lead_a = a[max(a)]
    lead_b = b[max(b)]
    lead_q = lead_a / lead_b
    qq = {unpack_exponents(e, shifts): Fraction(c) for e, c in q.items()}
    got_lead = qq[max(qq)] * scale
    if got_lead != lead_q:
        scale = -scale
    return {e: c * scale for e, c in qq.items()}


def _lcm_den(a: dict) -> int:
    den = 1
    for c in a.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return den


def _scaled_ints(a: dict) -> dict:
    den = _lcm_den(a)
    return {e: int(c * den) for e, c in a.items()}


def _content(a: dict) -> int:
    g = 0
    for c in a.values():
        g = gcd(g, c)
    return g


def poly_gcd(a: dict, b: dict, r: int | None = None):
    """Primitive gcd of two nonzero Fraction-coefficient tuple-key
    dicts: Fraction coefficients, positive lex-leading coefficient, or
    None when the heuristic gave up.  {zero: 1} signals a trivial gcd.
    """
    if r is None:
        r = len(next(iter(a)))
    shifts, _ = geometry(r)
    pa = _primitive(_scaled_ints(a))
    pb = _primitive(_scaled_ints(b))
    g = poly_gcd_int({pack_exponents(e, shifts): c for e, c in pa.items()},
                     {pack_exponents(e, shifts): c for e, c in pb.items()},
                     r)
    if g is None:
        return None
    return {unpack_exponents(e, shifts): Fraction(c) for e, c in g.items()}
