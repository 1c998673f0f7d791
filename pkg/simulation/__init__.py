from simulation.sim_config import SimConfig, System, fingerprint
from simulation.manifest import SOFTWARE_VERSION, BerRecord, RunManifest
from simulation.ber_engine import replay_manifest, run_ber_point, run_sweep, wilson_interval
from simulation.link import LinkModel
from simulation.presets import PRESETS, get_preset, list_presets
from simulation.rng import Stream, batch_rng
from simulation.workers import WorkerPool

__all__ = [
    'SimConfig',
    'System',
    'fingerprint',
    'BerRecord',
    'RunManifest',
    'SOFTWARE_VERSION',
    'LinkModel',
    'run_ber_point',
    'run_sweep',
    'replay_manifest',
    'wilson_interval',
    'PRESETS',
    'get_preset',
    'list_presets',
    'Stream',
    'batch_rng',
    'WorkerPool',
]
