"""Soft-decision ML decoding of binary linear block codes driven only by the
parity-check matrix, with exclusion-optimized decoders for extended Hamming
codes, brute-force oracles, and an AWGN Monte-Carlo harness."""

from .accounting import OpCounter
from .channel import ChannelConfig, Frame, ebn0_to_sigma, generate_frame, generate_frames
from .core import (BackRef, DecodeFailureError, DecodeResult, ErrorBlock,
                   LevelTable, combine_full, combine_symmetric, decode_general,
                   init_level_one, reconstruct_block, reduce_block,
                   select_global)
from .exham import (OnlineState, ParityClass, Schedule, ScheduleStep, Scope,
                    build_schedule, classify, decode_fullopt, decode_offopt,
                    filter_table, refresh_filter_inplace,
                    validate_extended_hamming)
from .gf2 import (CapacityError, CodeSpec, GeneratorMatrix, ParityCheckMatrix,
                  build_extended_hamming_parity_check,
                  build_hamming_parity_check, derive_generator, encode,
                  gf2_rank, hard_decision, load_parity_check, syndrome,
                  syndrome_batch)
from .oracles import (BlockSet, brute_force_ml, brute_force_penalties,
                      chase2_decode, enumerate_blocks, hdd_extended_hamming,
                      optimal_block_bruteforce, pattern_penalty)
from .sim import FerRecord, offopt_op_counts, run_fer, run_fer_point

__all__ = [
    "OpCounter", "ChannelConfig", "Frame", "ebn0_to_sigma", "generate_frame",
    "generate_frames", "BackRef", "DecodeFailureError", "DecodeResult",
    "ErrorBlock", "LevelTable", "combine_full", "combine_symmetric",
    "decode_general", "init_level_one", "reconstruct_block", "reduce_block",
    "select_global", "OnlineState", "ParityClass", "Schedule", "ScheduleStep",
    "Scope", "build_schedule", "classify", "decode_fullopt", "decode_offopt",
    "filter_table", "refresh_filter_inplace", "validate_extended_hamming",
    "CapacityError", "CodeSpec", "GeneratorMatrix", "ParityCheckMatrix",
    "build_extended_hamming_parity_check", "build_hamming_parity_check",
    "derive_generator", "encode", "gf2_rank", "hard_decision",
    "load_parity_check", "syndrome", "syndrome_batch", "BlockSet",
    "brute_force_ml", "brute_force_penalties", "chase2_decode",
    "enumerate_blocks", "hdd_extended_hamming", "optimal_block_bruteforce",
    "pattern_penalty", "FerRecord", "offopt_op_counts", "run_fer",
    "run_fer_point",
]
