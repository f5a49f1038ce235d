"""Constructors for the singlet, Bell and Werner states."""

from core.states.werner import (
    HWP_45,
    PatchworkSectors,
    SectorPartition,
    bell_phi,
    chaotic,
    patchwork_pipeline,
    patchwork_sectors,
    singlet,
    singlet_weight,
    werner,
)

__all__ = [
    "HWP_45",
    "PatchworkSectors",
    "SectorPartition",
    "bell_phi",
    "chaotic",
    "patchwork_pipeline",
    "patchwork_sectors",
    "singlet",
    "singlet_weight",
    "werner",
]
