"""Brute-force oracle for the frozen values in the C++ tests.

Polynomials are Python lists of 0/1 coefficients (index i = coefficient of
x^i). Nothing here shares code with the C++ library.

    python3 tests/golden/oracle.py
"""


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def from_int(v):
    out = []
    while v:
        out.append(v & 1)
        v >>= 1
    return out


def to_int(f):
    return sum(c << i for i, c in enumerate(f))


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] ^= x & y
    return trim(out)


def add(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return trim([x ^ y for x, y in zip(a, b)])


def T(f):
    if f[0] == 1:
        return add(mul([1, 1], f), [1])
    return f[1:]


def S3(f):
    g = mul([1, 1], f)
    return trim(g[:-1])


def t_min(f, step=T):
    k = 0
    while f != [1]:
        f = step(f)
        k += 1
    return k


def fp_orbit(p, coeffs):
    """Pre-period, cycle length, cycle entry of the F_p map."""
    f = tuple(coeffs)
    seen = {}
    k = 0
    while f not in seen:
        seen[f] = k
        if f[0] != 0:
            c0 = f[0]
            g = [0] * (len(f) + 1)
            for i, c in enumerate(f):
                g[i] = (g[i] + c) % p
                g[i + 1] = (g[i + 1] + c) % p
            g[0] = (g[0] - c0) % p
            while g and g[-1] == 0:
                g.pop()
            f = tuple(g)
        else:
            f = f[1:]
        k += 1
    mu = seen[f]
    return mu, k - mu, f


if __name__ == "__main__":
    traj = [[1, 0, 1]]
    while traj[-1] != [1]:
        traj.append(T(traj[-1]))
    print("trajectory x^2+1:", [hex(to_int(f)) for f in traj])
    for name, v in [("x^2+1", 0b101), ("x+1", 0b11), ("x^3+x^2", 0b1100),
                    ("x^4+x+1", 0b10011), ("(x+1)^3+1", 0b1110)]:
        print("t_min", name, t_min(from_int(v)))
    pow5 = [1]
    for _ in range(5):
        pow5 = mul(pow5, [1, 1])
    print("S3 time (x+1)^5:", t_min(pow5, S3))
    print("sweep rows d: sigma rho_sum argmax")
    for d in range(0, 13):
        best, arg, total = -1, None, 0
        for lo in range(1 << d):
            v = (1 << d) | lo
            t = t_min(from_int(v))
            total += t
            if t > best:
                best, arg = t, v
        print(f"  {{{d}, {best}, {total}, {hex(arg)}}},")
    print("fp p=3 f=1:", fp_orbit(3, [1]))
    print("fp p=3 f=2:", fp_orbit(3, [2]))
    print("fp p=2 x^2+1:", fp_orbit(2, [1, 0, 1]))
    print("fp p=3 x^2+2x+1:", fp_orbit(3, [1, 2, 1]))
    print("fp p=5 3x+2:", fp_orbit(5, [2, 3]))
    for p in (2, 3, 5):
        for d in range(0, 5):
            mx = 0
            import itertools
            for low in itertools.product(range(p), repeat=d):
                for lead in range(1, p):
                    mx = max(mx, fp_orbit(p, list(low) + [lead])[0])
            print(f"  fp max pre-period p={p} d={d}: {mx}")
