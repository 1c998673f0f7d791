from channel.rayleigh import (
    ChannelMatrix,
    PhaseProfile,
    ReceivedVector,
    as_array,
    complex_noise,
    effective_gain,
    effective_gains,
    phase_profile,
    phase_profiles,
    sample_channel,
    sample_channels,
    snr_db_to_n0,
    target_snr,
    transmit,
)

__all__ = [
    'ChannelMatrix',
    'PhaseProfile',
    'ReceivedVector',
    'as_array',
    'complex_noise',
    'effective_gain',
    'effective_gains',
    'phase_profile',
    'phase_profiles',
    'sample_channel',
    'sample_channels',
    'snr_db_to_n0',
    'target_snr',
    'transmit',
]
