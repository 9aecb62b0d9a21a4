"""
Class defines Drbg, the seeded deterministic generator every randomized
algorithm draws from. One seed per invocation reproduces a whole run.
"""
# == Standard Library imports ==
import hashlib
import secrets


class Drbg:
    """
    Class for a counter-mode SHA-256 generator. Not a vetted DRBG: it only
    needs to be reproducible and well spread for benchmarking.
    """

    def __init__(self, seed: int | bytes):
        if isinstance(seed, int):
            if seed < 0:
                raise ValueError("seed must be non-negative")
            seed = seed.to_bytes(max(8, (seed.bit_length() + 7) // 8), "big")
        self._key = hashlib.sha256(b"drbg-seed" + bytes(seed)).digest()
        self._counter = 0
        self._buffer = b""

    @classmethod
    def from_os(cls) -> tuple["Drbg", int]:
        """
        Method draws a fresh 64-bit seed from OS entropy.
        :return: Generator and the seed so the run can be replayed.
        """
        seed = secrets.randbits(64)
        return cls(seed), seed

    def random_bytes(self, n: int) -> bytes:
        while len(self._buffer) < n:
            block = hashlib.sha256(
                self._key + self._counter.to_bytes(8, "big")).digest()
            self._counter += 1
            self._buffer += block
        out, self._buffer = self._buffer[:n], self._buffer[n:]
        return out

    def randbits(self, k: int) -> int:
        if k <= 0:
            return 0
        value = int.from_bytes(self.random_bytes((k + 7) // 8), "big")
        return value >> (8 * ((k + 7) // 8) - k)

    def randbelow(self, n: int) -> int:
        """
        Method returns a uniform integer in [0, n) by rejection sampling.
        """
        if n <= 0:
            raise ValueError("upper bound must be positive")
        k = n.bit_length()
        while True:
            value = self.randbits(k)
            if value < n:
                return value

    def randrange(self, low: int, high: int) -> int:
        return low + self.randbelow(high - low)

    def nonzero_below(self, n: int) -> int:
        """
        Method returns a uniform integer in [1, n).
        """
        return self.randrange(1, n)

    def fork(self, label: str) -> "Drbg":
        """
        Method derives an independent child generator; the parent state is
        untouched so sibling forks do not depend on draw order.
        """
        return Drbg(hashlib.sha256(self._key + label.encode("utf-8")).digest())
