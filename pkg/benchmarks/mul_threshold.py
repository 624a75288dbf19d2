"""Locate the schoolbook/Kronecker multiplication crossover.

Poly.__mul__ switches from schoolbook to Kronecker substitution once
the combined operand length reaches _KRON_MIN_LEN.  This script times
both kernels head to head on random dense operands over a few odd
prime fields and reports the first length where Kronecker wins, so the
constant in poly.py can be re-checked after interpreter or hardware
changes.

Usage:
    python3 benchmarks/mul_threshold.py
    python3 benchmarks/mul_threshold.py --chars 3 101 --max-len 256
"""

import argparse
import random
import timeit

from fqwilson.poly import _kron_mul, _school_mul_prime


def time_once(fn, a, b, p, repeat, number):
    best = min(timeit.repeat(lambda: fn(a, b, p), repeat=repeat, number=number))
    return best / number


def sweep(p, lengths, rng, repeat, number):
    rows = []
    for n in lengths:
        half = n // 2
        a = tuple(rng.randrange(p) for _ in range(half))
        b = tuple(rng.randrange(p) for _ in range(n - half))
        school = time_once(_school_mul_prime, a, b, p, repeat, number)
        kron = time_once(_kron_mul, a, b, p, repeat, number)
        rows.append((n, school, kron))
    return rows


def first_crossover(rows):
    # first combined length from which Kronecker never loses again
    for i, (n, school, kron) in enumerate(rows):
        if all(k <= s for _, s, k in rows[i:]):
            return n if kron <= school else None
    return None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--chars", type=int, nargs="+", default=[3, 5, 101],
                    help="prime characteristics to sweep (default: 3 5 101)")
    ap.add_argument("--max-len", type=int, default=192,
                    help="largest combined operand length (default: 192)")
    ap.add_argument("--step", type=int, default=8,
                    help="length step (default: 8)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=5,
                    help="timeit repeats, best is kept (default: 5)")
    ap.add_argument("--number", type=int, default=200,
                    help="multiplications per timing sample (default: 200)")
    args = ap.parse_args(argv)

    lengths = range(args.step, args.max_len + 1, args.step)
    for p in args.chars:
        if p < 3 or p >= 256:
            ap.error(f"char {p} outside the Kronecker dispatch range [3, 255]")
        rng = random.Random(args.seed)
        rows = sweep(p, lengths, rng, args.repeat, args.number)
        print(f"char {p}  (combined length, schoolbook us, kronecker us)")
        for n, school, kron in rows:
            mark = "  <-- kronecker wins" if kron < school else ""
            print(f"  {n:4d}  {school * 1e6:9.2f}  {kron * 1e6:9.2f}{mark}")
        cross = first_crossover(rows)
        if cross is None:
            print("  no stable crossover in range; raise --max-len")
        else:
            print(f"  stable crossover at combined length ~{cross}")
        print()


if __name__ == "__main__":
    main()
