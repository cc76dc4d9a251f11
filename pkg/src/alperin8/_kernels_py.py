"""Pure-Python versions of the inner loops; used when the compiled core is absent."""

from __future__ import annotations

from typing import Sequence


def hook_lengths(parts: Sequence[int]) -> list[int]:
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    return [parts[i] - j + conj[j] - i - 1 for i in range(len(parts)) for j in range(parts[i])]


def beta_hooks(beta: Sequence[int]) -> list[int]:
    """Lengths z - z' with z in beta, 0 <= z' < z, z' not in beta."""
    present = set(beta)
    return [z - w for z in beta for w in range(z) if w not in present]


def cross_hooks(src: Sequence[int], other: Sequence[int]) -> list[int]:
    """Lengths z - z' with z in src, 0 <= z' < z, z' not in other."""
    present = set(other)
    return [z - w for z in src for w in range(z) if w not in present]


def structure_constants(class_of: Sequence[int], cols: Sequence[Sequence[int]], nclasses: int) -> list:
    """out[k][i][j] = #{x in C_i : x^-1 z_k in C_j}, given cols[k][x] = class of x^-1 z_k."""
    out = []
    for col in cols:
        counts = [[0] * nclasses for _ in range(nclasses)]
        for ci, cj in zip(class_of, col):
            counts[ci][cj] += 1
        out.append(counts)
    return out
