"""Regenerates crates/core/src/ff/poly_table.rs.

For every prime p and degree k >= 2 with p^k <= 2^24, pins the first monic
primitive polynomial of degree k over GF(p), scanning lower coefficients
(c_0, ..., c_{k-1}) in increasing base-p index order.
"""
from sympy import factorint, primerange

CAP = 1 << 24


def polmulmod(a, b, f, p):
    k = len(f) - 1
    res = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for d in range(len(res) - 1, k - 1, -1):
        c = res[d]
        if c:
            for i in range(k + 1):
                res[d - k + i] = (res[d - k + i] - c * f[i]) % p
    return res[:k]


def polpow_x(e, f, p):
    k = len(f) - 1
    result = [1] + [0] * (k - 1)
    base = [0, 1] + [0] * (k - 2)
    while e:
        if e & 1:
            result = polmulmod(result, base, f, p)
        base = polmulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive(f, p, q, primes):
    k = len(f) - 1
    one = [1] + [0] * (k - 1)
    if polpow_x(q - 1, f, p) != one:
        return False
    return all(polpow_x((q - 1) // l, f, p) != one for l in primes)


def first_primitive(p, k):
    q = p ** k
    primes = list(factorint(q - 1))
    for idx in range(p ** k):
        low = [(idx // p ** i) % p for i in range(k)]
        if low[0] == 0:
            continue
        f = low + [1]
        if is_primitive(f, p, q, primes):
            return low
    raise RuntimeError((p, k))


rows = []
for p in primerange(2, 4097):
    k = 2
    while p ** k <= CAP:
        rows.append((p, k, first_primitive(p, k)))
        k += 1

with open("crates/core/src/ff/poly_table.rs", "w") as out:
    out.write("// @generated by tools/gen_poly_table.py; do not edit by hand.\n")
    out.write("//\n// (p, k, [c_0, ..., c_{k-1}]) for the monic primitive polynomial\n")
    out.write("// x^k + c_{k-1} x^{k-1} + ... + c_0 over GF(p).\n\n")
    out.write("pub(crate) static REDUCTION_POLYS: &[(u32, u32, &[u32])] = &[\n")
    for p, k, low in rows:
        out.write(f"    ({p}, {k}, &{low}),\n")
    out.write("];\n")
print(len(rows))
