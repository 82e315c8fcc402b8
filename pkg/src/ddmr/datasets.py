"""Bundled example datasets."""

from __future__ import annotations

from .signals import DataSet, TimeSeries

__all__ = ["rl_circuit", "BUILTIN_DATASETS", "builtin_dataset"]

# Voltage-to-current record of a fourth-order RL ladder circuit (four
# inductors, five resistors), sampled at 0.5 s; 20 samples, values carry
# four decimal places. The input is sinusoidal, which is deliberately *not*
# persistently exciting of high order: the record pins down transfer values
# only at some interpolation points.
_RL_INPUT = (
    6.0000, 4.8284, 1.5000, -1.8284, -3.3750,
    -2.4534, 0.2188, 2.9534, 4.0703, 2.8675,
    0.0215, -2.8167, -3.9937, -2.8250, 0.0018,
    2.8294, 4.0005, 2.8287, 0.0001, -2.8284,
)
_RL_OUTPUT = (
    0.0000, 1.4373, 2.0864, 1.9180, 1.1637,
    0.3228, -0.1050, 0.1073, 0.7958, 1.5108,
    1.7858, 1.4135, 0.5692, -0.2919, -0.7007,
    -0.4495, 0.2862, 1.0504, 1.3730, 1.0452,
)


def rl_circuit() -> DataSet:
    """The RL ladder circuit record (T = 19, suitable for order 4)."""
    return DataSet(TimeSeries(_RL_INPUT), TimeSeries(_RL_OUTPUT))


BUILTIN_DATASETS = {
    "paper-rl": rl_circuit,
}


def builtin_dataset(name: str) -> DataSet:
    """Look up a bundled dataset by its registry name."""
    try:
        factory = BUILTIN_DATASETS[name]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_DATASETS))
        raise ValueError(f"unknown built-in dataset {name!r} (available: {known})") from None
    return factory()
