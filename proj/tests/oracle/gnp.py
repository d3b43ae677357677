"""Independent mt19937_64 and the documented G(n, p) draw rule; prints graph6."""
import sys

MASK = (1 << 64) - 1


class MT64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & MASK
        for i in range(1, 312):
            self.mt[i] = (6364136223846793005 * (self.mt[i - 1] ^ (self.mt[i - 1] >> 62)) + i) & MASK
        self.idx = 312

    def next(self):
        if self.idx >= 312:
            for i in range(312):
                x = (self.mt[i] & 0xFFFFFFFF80000000) | (self.mt[(i + 1) % 312] & 0x7FFFFFFF)
                xa = x >> 1
                if x & 1:
                    xa ^= 0xB5026F5AA96619E9
                self.mt[i] = self.mt[(i + 156) % 312] ^ xa
            self.idx = 0
        y = self.mt[self.idx]
        self.idx += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK


def gnp(n, p, seed):
    rng = MT64(seed)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if (rng.next() >> 11) * 2.0 ** -53 < p]


def graph6(n, edges):
    es = set(edges)
    bits = [1 if (r, c) in es else 0 for c in range(1, n) for r in range(c)]
    while len(bits) % 6:
        bits.append(0)
    out = chr(n + 63)
    for k in range(0, len(bits), 6):
        out += chr(int("".join(map(str, bits[k:k + 6])), 2) + 63)
    return out


if __name__ == "__main__":
    assert MT64(5489).next() == 14514284786278117030  # reference value of mt19937_64
    n, p, seed = int(sys.argv[1]), float(sys.argv[2]), int(sys.argv[3])
    print(graph6(n, gnp(n, p, seed)))
