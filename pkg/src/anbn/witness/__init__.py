"""Residue witnesses: construction, certificates, brute oracle, coverage engine."""

from anbn.witness.construct import witness, witness_coprime
from anbn.witness.coverage import coverage_index, residue_system_check
from anbn.witness.oracle import brute_witness
from anbn.witness.schemas import (
    CoverageReport,
    Decomposition,
    Verdict,
    WitnessCertificate,
    WitnessFrame,
    WitnessQuery,
)
from anbn.witness.verify import verify_certificate

__all__ = [
    "CoverageReport",
    "Decomposition",
    "Verdict",
    "WitnessCertificate",
    "WitnessFrame",
    "WitnessQuery",
    "brute_witness",
    "coverage_index",
    "residue_system_check",
    "verify_certificate",
    "witness",
    "witness_coprime",
]
