"""Scalar-linear index codes for cyclic consecutive side-information.

Construction of the K x (K-D) adjacent-independent-row encoding matrix,
closed-form per-symbol encoding, low-complexity per-receiver XOR decoding
plans with reduced side-information sets, and a seeded Monte Carlo
simulator for BPSK transmission of the broadcast symbols over AWGN and
Rayleigh-fading channels.
"""

from .airmatrix import (AirMatrix, CellLocation, build_air_matrix,
                        column_support, from_text, locate_cell,
                        support_positions, to_text)
from .chain import (IntervalMap, ParamChain, build_chain, build_intervals,
                    locate_column, side_window)
from .channel import (BerReport, ChannelSpec, grouping_report, run_sweep,
                      transmit_estimate)
from .decoder import (DecodePlan, SideInfoCheck, all_plans, build_plan,
                      decode, plan_records, render_plan_table,
                      verify_reduced_side_information)
from .encoder import (CodeExpression, boolean_support, encode_boolean,
                      encode_matrix, render_code)
from .ff import (SUPPORTED_PRIMES, BitVector, PrimeFieldMatrix, rank,
                 rank_mod_p, xor_accumulate)
from .geometry import (DistanceProfile, distance_profile, down_distance,
                       right_distance, scan_distance_profile,
                       scan_down_distance, scan_right_distance,
                       scan_up_distance, up_distance)

__version__ = "0.1.0"

__all__ = [
    "AirMatrix", "BerReport", "BitVector", "CellLocation", "ChannelSpec",
    "CodeExpression", "DecodePlan", "DistanceProfile", "IntervalMap",
    "ParamChain", "PrimeFieldMatrix", "SUPPORTED_PRIMES", "SideInfoCheck",
    "all_plans", "boolean_support", "build_air_matrix", "build_chain",
    "build_intervals", "build_plan", "column_support", "decode",
    "distance_profile", "down_distance", "encode_boolean", "encode_matrix",
    "from_text", "grouping_report", "locate_cell", "locate_column",
    "plan_records", "rank", "rank_mod_p", "render_code", "render_plan_table",
    "right_distance", "run_sweep", "scan_distance_profile",
    "scan_down_distance", "scan_right_distance", "scan_up_distance",
    "side_window", "support_positions", "to_text", "transmit_estimate",
    "up_distance", "verify_reduced_side_information", "xor_accumulate",
]
