"""
Línea de comandos del simulador RIS-RSM con selección de antenas.

Subcomandos:
    ber         BER Monte Carlo sobre la malla de SNR (o en un único punto).
    sweep       Barrido completo con manifiesto reproducible y cota de unión opcional.
    aber        Cota de unión semianalítica de la BER.
    capacity    Capacidad ergódica.
    complexity  Complejidad en multiplicaciones reales.

Códigos de salida: 0 éxito, 1 error de ejecución, 2 error de uso o de configuración.
"""

import argparse
import logging
import sys

import pandas as pd

from analysis.aber_analysis import aber_curve
from analysis.capacity_analysis import capacity_curve, ris_baseline_curve
from analysis.complexity import ComplexitySystem, complexity_rm, complexity_table, parameter_label
from detectors.base_detector import DetectorKind
from simulation.ber_engine import replay_manifest, run_sweep
from simulation.manifest import SOFTWARE_VERSION, RunManifest
from simulation.presets import list_presets
from simulation.sim_config import SimConfig
from utils.config_manager import ConfigManager
from utils.errors import ConfigError, DimensionError, InvalidCombination, RisRsmError
from utils.export_utils import export_csv, export_excel, records_frame
from utils.logging_utils import configurar_logging
from utils.validation_utils import validar_entero

LOGGER = logging.getLogger(__name__)

# Conjuntos de parámetros de la tabla de complejidad de referencia
REFERENCE_PARAMETER_SETS = {
    "(a)": {"M": 16, "n_R": 8, "n_S": 4, "N": 32},
    "(b)": {"M": 8, "n_R": 16, "n_S": 8, "N": 64},
    "(c)": {"M": 16, "n_R": 16, "n_S": 8, "N": 256},
}

_ALIAS_PARAMETROS = {"m": "M", "nr": "n_R", "n_r": "n_R", "ns": "n_S", "n_s": "n_S", "n": "N"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def parse_params(texto):
    """
    Convierte 'M=16,nR=8,nS=4,N=32' en un diccionario de parámetros.

    Raises:
        ConfigError: Si falta algún parámetro o alguno no es entero.
    """
    params = {}
    for parte in texto.split(","):
        if not parte.strip():
            continue
        if "=" not in parte:
            raise ConfigError(f"Parámetro sin valor: {parte!r} (formato M=16,nR=8,nS=4,N=32)")
        clave, valor = (p.strip() for p in parte.split("=", 1))
        nombre = _ALIAS_PARAMETROS.get(clave.lower())
        if nombre is None:
            raise ConfigError(f"Parámetro desconocido: {clave}")
        params[nombre] = validar_entero(valor, nombre, min_val=1)
    faltan = {"M", "n_R", "n_S", "N"} - set(params)
    if faltan:
        raise ConfigError(f"Faltan parámetros: {', '.join(sorted(faltan))}")
    return params


def _opciones_experimento():
    comun = argparse.ArgumentParser(add_help=False)
    grupo = comun.add_argument_group("experimento")
    grupo.add_argument("--config", help="archivo de configuración TOML o JSON")
    grupo.add_argument("--preset", help="configuración predefinida (ver --list-presets)")
    grupo.add_argument("--system", help="RIS-QAM, RIS-PSK, RIS-RSM o AS-RIS-RSM")
    grupo.add_argument("--selection", help="none, coas, acas o edas")
    grupo.add_argument("--detector", help="ml o greedy")
    grupo.add_argument("--modulation", help="QAM o PSK")
    grupo.add_argument("--M", dest="M", type=int, help="orden de la constelación")
    grupo.add_argument("--n-R", dest="n_R", type=int, help="antenas receptoras")
    grupo.add_argument("--n-S", dest="n_S", type=int, help="antenas seleccionadas")
    grupo.add_argument("--N", dest="N", type=int, help="elementos de la RIS")
    grupo.add_argument("--es", dest="Es", type=float, help="energía de símbolo")
    grupo.add_argument("--snr", dest="snr_grid_db", help="malla de SNR: '0,5,10' o '0:30:2'")
    grupo.add_argument("--seed", type=int, help="semilla de 64 bits")
    grupo.add_argument("--workers", type=int, help="procesos de trabajo")
    grupo.add_argument("--min-bit-errors", dest="min_bit_errors", type=int)
    grupo.add_argument("--max-trials", dest="max_trials", type=float)
    grupo.add_argument("--batch-size", dest="batch_size", type=int)
    grupo.add_argument("--n-channel", dest="n_channel", type=int, help="realizaciones de canal")
    grupo.add_argument("--subset-cap", dest="subset_cap", type=int)
    grupo.add_argument("--noiseless", action="store_true", default=None, help="N0 = 0 (depuración)")
    return comun


def _opciones_salida():
    comun = argparse.ArgumentParser(add_help=False)
    grupo = comun.add_argument_group("salida")
    grupo.add_argument("--out", help="CSV de resultados (por defecto, salida estándar)")
    grupo.add_argument("--xlsx", help="libro de Excel con metadatos y resultados")
    grupo.add_argument("--plot", help="figura de resultados (PNG, PDF, ...)")
    grupo.add_argument("-v", "--verbose", action="count", default=0)
    grupo.add_argument("-q", "--quiet", action="store_true")
    return comun


def build_parser():
    """Construye el analizador de argumentos."""
    parser = _Parser(prog="ris-rsm", description="Simulador RIS-RSM con selección de antenas receptoras")
    parser.add_argument("--list-presets", action="store_true", help="muestra los presets y termina")
    parser.add_argument("--version", action="version", version=f"%(prog)s {SOFTWARE_VERSION}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    experimento = _opciones_experimento()
    salida = _opciones_salida()

    ber = sub.add_parser("ber", parents=[experimento, salida], help="BER Monte Carlo")
    ber.add_argument("--snr-db", type=float, help="simula un único punto de SNR")
    ber.add_argument("--json", help="manifiesto JSON")

    sweep = sub.add_parser("sweep", parents=[experimento, salida], help="barrido con manifiesto")
    sweep.add_argument("--json", help="manifiesto JSON")
    sweep.add_argument("--with-aber", action="store_true", help="añade la cota de unión")
    sweep.add_argument("--replay", help="repite la ejecución de un manifiesto")

    sub.add_parser("aber", parents=[experimento, salida], help="cota de unión de la BER")

    capacity = sub.add_parser("capacity", parents=[experimento, salida], help="capacidad ergódica")
    capacity.add_argument("--baseline", action="store_true", help="añade la referencia RIS de una antena")

    complexity = sub.add_parser("complexity", parents=[salida], help="complejidad en RM")
    complexity.add_argument("--all", action="store_true", help="todas las filas de la tabla")
    complexity.add_argument("--system", help="RIS-QAM/PSK, RIS-RSM, COAS, ACAS o EDAS")
    complexity.add_argument("--detector", default="ml", help="ml o greedy")
    complexity.add_argument(
        "--params", action="append", default=[],
        help="parámetros 'M=16,nR=8,nS=4,N=32' (repetible)",
    )
    return parser


def _configuracion(args):
    manager = ConfigManager(preset=args.preset)
    if args.config:
        manager.load_config(args.config)
    claves = [
        "system", "selection", "detector", "modulation", "M", "n_R", "n_S", "N", "Es",
        "snr_grid_db", "seed", "workers", "min_bit_errors", "max_trials", "batch_size",
        "n_channel", "subset_cap", "noiseless",
    ]
    manager.update({k: getattr(args, k, None) for k in claves})
    return manager.to_sim_config()


def _escribir_tabla(df, args, metadatos):
    if args.out:
        export_csv(df, args.out)
    else:
        df.to_csv(sys.stdout, index=False, lineterminator="\n")
    if args.xlsx:
        export_excel(df, args.xlsx, metadatos)


def _metadatos(config):
    datos = dict(config.to_dict())
    datos["snr_grid_db"] = ",".join(f"{s:g}" for s in config.snr_grid_db)
    datos["fingerprint"] = config.fingerprint()
    datos["software_version"] = SOFTWARE_VERSION
    return datos


def _graficar_ber(manifest, etiqueta, destino):
    from utils.plot_utils import crear_grafica_ber, save_plot

    aber = {etiqueta: manifest.aber} if manifest.aber else None
    fig, _ = crear_grafica_ber({etiqueta: manifest.records}, aber=aber)
    save_plot(fig, destino)


def comando_ber(args):
    config = _configuracion(args)
    if args.snr_db is not None:
        config = config.replace(snr_grid_db=(float(args.snr_db),))
    manifest = run_sweep(config)
    _escribir_tabla(records_frame(manifest), args, _metadatos(config))
    if args.json:
        manifest.to_json(args.json)
    if args.plot:
        _graficar_ber(manifest, config.label, args.plot)
    return 0


def comando_sweep(args):
    if args.replay:
        original = RunManifest.from_json(args.replay)
        manifest = replay_manifest(original, workers=args.workers)
        if not manifest.same_results(original):
            LOGGER.error("La repetición de %s no reproduce los registros guardados", args.replay)
            return 1
        config = SimConfig.from_dict(manifest.config)
    else:
        config = _configuracion(args)
        manifest = run_sweep(config, with_aber=args.with_aber)

    df = records_frame(manifest)
    if manifest.aber:
        df["aber"] = [a.value for a in manifest.aber]
    _escribir_tabla(df, args, _metadatos(config))
    if args.json:
        manifest.to_json(args.json)
    if args.plot:
        _graficar_ber(manifest, config.label, args.plot)
    return 0


def comando_aber(args):
    config = _configuracion(args)
    estimaciones = aber_curve(config, config.snr_grid_db)
    df = pd.DataFrame({
        "system": config.system.value,
        "selection": config.selection.value,
        "M": config.M,
        "n_R": config.n_R,
        "n_S": config.n_S,
        "N": config.N,
        "snr_db": [a.snr_db for a in estimaciones],
        "aber": [a.value for a in estimaciones],
        "channel_realizations": [a.channel_realizations for a in estimaciones],
        "seed": config.seed,
    })
    _escribir_tabla(df, args, _metadatos(config))
    if args.plot:
        from utils.plot_utils import crear_grafica_ber, save_plot

        fig, _ = crear_grafica_ber({}, titulo="Cota de unión de la BER", aber={config.label: estimaciones})
        save_plot(fig, args.plot)
    return 0


def comando_capacity(args):
    config = _configuracion(args)
    registros = capacity_curve(config, config.snr_grid_db)
    df = pd.DataFrame({
        "system": config.system.value,
        "selection": config.selection.value,
        "M": config.M,
        "n_R": config.n_R,
        "n_S": config.n_S,
        "N": config.N,
        "snr_db": [r.snr_db for r in registros],
        "capacity": [r.bits_per_use for r in registros],
        "std_error": [r.std_error for r in registros],
        "realizations": [r.realizations for r in registros],
        "seed": config.seed,
    })
    curvas = {config.label: registros}
    if args.baseline:
        referencia = ris_baseline_curve(config, config.snr_grid_db)
        df["baseline_capacity"] = [r.bits_per_use for r in referencia]
        curvas["RIS (una antena)"] = referencia
    _escribir_tabla(df, args, _metadatos(config))
    if args.plot:
        from utils.plot_utils import crear_grafica_capacidad, save_plot

        fig, _ = crear_grafica_capacidad(curvas)
        save_plot(fig, args.plot)
    return 0


def comando_complexity(args):
    if args.params:
        conjuntos = [parse_params(p) for p in args.params]
    else:
        conjuntos = list(REFERENCE_PARAMETER_SETS.values())

    if args.all or not args.system:
        df = complexity_table(conjuntos)
    else:
        # Sistema, detector o combinación no válidos son errores de uso
        try:
            sistema = ComplexitySystem.parse(args.system)
            detector = DetectorKind.parse(args.detector)
            fila = [complexity_rm(sistema, detector, p["M"], p["n_R"], p["n_S"], p["N"]) for p in conjuntos]
        except (DimensionError, InvalidCombination) as e:
            raise ConfigError(str(e)) from e
        df = pd.DataFrame(
            [fila],
            index=pd.Index([f"{sistema.value} {detector.name}"], name="system"),
            columns=[parameter_label(p) for p in conjuntos],
        )

    if args.out:
        df.to_csv(args.out, encoding="utf-8", lineterminator="\n")
    else:
        print(df.to_string())
    if args.xlsx:
        export_excel(df.reset_index(), args.xlsx, {"software_version": SOFTWARE_VERSION})
    if args.plot:
        from utils.plot_utils import crear_grafica_complejidad, save_plot

        fig, _ = crear_grafica_complejidad(df)
        save_plot(fig, args.plot)
    return 0


COMANDOS = {
    "ber": comando_ber,
    "sweep": comando_sweep,
    "aber": comando_aber,
    "capacity": comando_capacity,
    "complexity": comando_complexity,
}


def cli_main(argv=None):
    """
    Punto de entrada de la línea de comandos.

    Args:
        argv (list, optional): Argumentos sin el nombre del programa.

    Returns:
        int: Código de salida (0 éxito, 1 error de ejecución, 2 error de uso).
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configurar_logging(-1 if getattr(args, "quiet", False) else getattr(args, "verbose", 0))

    if args.list_presets:
        for nombre, descripcion in list_presets():
            print(f"{nombre:16s} {descripcion}")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: falta el subcomando", file=sys.stderr)
        return 2

    try:
        return COMANDOS[args.command](args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except RisRsmError as e:
        LOGGER.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except Exception as e:
        LOGGER.exception("Error inesperado: %s", e)
        return 1


if __name__ == "__main__":
    sys.exit(cli_main())
