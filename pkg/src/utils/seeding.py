"""Deterministic seed derivation for reproducible parallel runs."""

import hashlib

import numpy as np


def derive_seed(master_seed: int, *keys: int) -> int:
    """
    Derive a child seed from a master seed and integer keys.

    Identical inputs give identical seeds on every platform, independent of
    the order in which replicates are scheduled.
    """
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=tuple(keys))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def label_key(label: str) -> int:
    """Stable 64-bit integer for a text label (not Python's salted ``hash``)."""
    return int.from_bytes(hashlib.sha256(label.encode("utf-8")).digest()[:8], "big")


def replicate_rngs(master_seed: int, replicates: int) -> list[np.random.Generator]:
    """One independent generator per replicate, spawned from the master seed."""
    children = np.random.SeedSequence(master_seed).spawn(replicates)
    return [np.random.default_rng(child) for child in children]
