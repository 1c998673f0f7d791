from modem.constellation import Constellation, ModulationKind, build_constellation, gray_code
from modem.mapping import (
    FrameSymbol,
    count_bit_errors,
    demap,
    frame_bits,
    hamming_matrix,
    map_bits,
    popcount,
)

__all__ = [
    'Constellation',
    'ModulationKind',
    'build_constellation',
    'gray_code',
    'FrameSymbol',
    'map_bits',
    'demap',
    'count_bit_errors',
    'frame_bits',
    'hamming_matrix',
    'popcount',
]
