"""Compare the numba and numpy kernel paths on MLP-sized inputs.

    python benchmarks/bench_kernels.py [--dim 101770] [--repeat 20]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from fedsparq import _accel, compress, halfcodec


def _cases(dim: int):
    rng = np.random.default_rng(0)
    x = (rng.standard_normal(dim) * 1e-3).astype(np.float32)
    bits = x.view(np.uint32)
    mags = np.abs(x).astype(np.float64)
    u = rng.random(dim)
    codes = halfcodec._encode_rne_numpy(bits)
    lengths = np.array([dim - dim // 10, dim // 10], dtype=np.int64)
    offsets = np.array([0, lengths[0]], dtype=np.int64)
    taus = np.array([8e-4, 8e-4])
    return {
        "encode nearest": (halfcodec._encode_rne_loop, halfcodec._encode_rne_numpy, (bits,)),
        "encode stochastic": (halfcodec._encode_stochastic_loop, halfcodec._encode_stochastic_numpy,
                              (bits, mags, u)),
        "decode": (halfcodec._decode_loop, halfcodec._decode_numpy, (codes,)),
        "threshold mask": (compress._threshold_mask_loop, compress._threshold_mask_numpy,
                           (x, offsets, lengths, taus)),
    }


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--dim", type=int, default=101_770)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if _accel._numba is None:
        raise SystemExit("numba is not installed; only the numpy path exists")
    print(f"dim={args.dim} repeat={args.repeat} (best of 5, ms per call)")
    print(f"{'kernel':20s} {'numba':>9s} {'numpy':>9s} {'speedup':>8s}")
    for name, (jit_fn, np_fn, inputs) in _cases(args.dim).items():
        jit_fn(*inputs)  # compile outside the timing
        same = np.array_equal(np.asarray(jit_fn(*inputs)).view(np.uint8),
                              np.asarray(np_fn(*inputs)).view(np.uint8))
        t_jit = min(timeit.repeat(lambda: jit_fn(*inputs), number=args.repeat, repeat=5))
        t_np = min(timeit.repeat(lambda: np_fn(*inputs), number=args.repeat, repeat=5))
        ms = 1e3 / args.repeat
        print(f"{name:20s} {t_jit * ms:9.3f} {t_np * ms:9.3f} {t_np / t_jit:7.1f}x"
              f"{'' if same else '  MISMATCH'}")


if __name__ == "__main__":
    main()
