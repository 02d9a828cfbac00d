"""Regular permutation representation of <a, b | a^4 = b^4 = 1, c = [b, a] central, c^2 = 1>.

Elements are a^i b^j c^k (i, j mod 4, k mod 2) with
(a^i b^j c^k)(a^u b^v c^w) = a^(i+u) b^(j+v) c^(k+w+j*u).
"""

import itertools

ELEMENTS = list(itertools.product(range(4), range(4), range(2)))
INDEX = {e: n for n, e in enumerate(ELEMENTS)}


def mul(x, y):
    i, j, k = x
    u, v, w = y
    return ((i + u) % 4, (j + v) % 4, (k + w + j * u) % 2)


def right_regular(g):
    # point x -> x*g, 1-based cycles
    images = [INDEX[mul(x, g)] for x in ELEMENTS]
    seen, cycles = set(), []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cyc, p = [], start
        while p not in seen:
            seen.add(p)
            cyc.append(p + 1)
            p = images[p]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles)


if __name__ == "__main__":
    print("# (C4 x C2) : C4, order 32, regular representation")
    print("# generated by make_order32.py")
    print(f"degree: {len(ELEMENTS)}")
    print(f"gen: {right_regular((1, 0, 0))}")
    print(f"gen: {right_regular((0, 1, 0))}")
