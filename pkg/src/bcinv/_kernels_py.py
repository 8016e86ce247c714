"""Pure-Python kernels for dense polynomial arithmetic mod p and the
quadratic norm-form search.

Polynomials are plain lists of ints in [0, p), lowest degree first, with no
trailing zeros ([] is the zero polynomial).  These functions are the hot
inner loops of the package; bcinv._core is a compiled twin with identical
semantics for word-sized moduli, selected in bcinv._backend.
"""

from math import isqrt


def trim(c: list[int]) -> list[int]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    del c[n:]
    return c


def pmod_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    for i, v in enumerate(r):
        r[i] = v % p
    return trim(r)


def pmod_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of a by b; lc(b) must be invertible mod p."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for i in range(len(q) - 1, -1, -1):
        f = r[i + db] * inv % p
        if f:
            q[i] = f
            for j in range(db + 1):
                r[i + j] = (r[i + j] - f * b[j]) % p
        else:
            r[i + db] = 0
    return trim(q), trim(r)


def pmod_rem(a: list[int], b: list[int], p: int) -> list[int]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return trim(r)
    inv = pow(b[-1], -1, p)
    for i in range(len(r) - db - 1, -1, -1):
        f = r[i + db] * inv % p
        if f:
            for j in range(db + 1):
                r[i + j] = (r[i + j] - f * b[j]) % p
        else:
            r[i + db] = 0
    return trim(r)


def pmod_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd over F_p (p prime)."""
    while b:
        a, b = b, pmod_rem(a, b, p)
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def pmod_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    return pmod_rem(pmod_mul(a, b, p), mod, p)


def pmod_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    """base**e reduced mod (mod, p); e >= 0."""
    result = pmod_rem([1], mod, p)
    acc = pmod_rem(base, mod, p)
    while e:
        if e & 1:
            result = pmod_rem(pmod_mul(result, acc, p), mod, p)
        e >>= 1
        if e:
            acc = pmod_rem(pmod_mul(acc, acc, p), mod, p)
    return result


def quad_gen_search_imag(B: int, C: int, n: int, la: int, lb: int, lc: int):
    """Find (x, y) with x^2 - B*x*y + C*y^2 = n inside the lattice
    spanned by (la, 0) and (lb, lc); the form must be positive definite
    (B^2 < 4C).  Returns a pair or None.
    """
    absD = 4 * C - B * B
    if n < 0:
        return None
    fourn = 4 * n
    ymax = isqrt(fourn // absD) if absD <= fourn else 0
    y = -(ymax - ymax % lc)
    while y <= ymax:
        rad = fourn - absD * y * y
        if rad >= 0:
            s = isqrt(rad)
            if s * s == rad:
                by = B * y
                for t in (by + s, by - s):
                    if t % 2 == 0:
                        x = t // 2
                        if (x - (y // lc) * lb) % la == 0:
                            return (x, y)
        y += lc
    return None
