# config.py - Configuración, logging y ejecución paralela

import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from dotenv import load_dotenv

# Cargar variables de entorno
load_dotenv()

# Variables numéricas con su valor por defecto y descripción
NUMERIC_VARS = {
    'FACTOR_THREADS': (1, 'Procesos para paralelizar los items de una suite'),
    'LIST_N_MAX': (5, 'Grado máximo para enumeración por listado'),
    'LIST_G_MAX': (2, 'Género máximo para enumeración por listado'),
    'DP_N_MAX': (6, 'Grado máximo para conteo por programación dinámica'),
    'RELATION_N_MAX': (3, 'Grado máximo para la relación de doble Hurwitz'),
    'PORT': (8080, 'Puerto del servicio HTTP'),
}

LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()
GOLDEN_DIR = os.getenv(
    'GOLDEN_DIR',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'golden'),
)
ANCHORS_FILE = os.getenv(
    'ANCHORS_FILE',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'anchors.json'),
)

_configured = False


def _read_int(name):
    default, _ = NUMERIC_VARS[name]
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value >= 0 else default


def get_setting(name):
    """Lee una variable numérica del entorno, con su valor por defecto"""
    return _read_int(name)


def validate_environment_variables():
    """Valida que las variables numéricas del entorno sean enteros no negativos"""
    invalid = []
    for var_name, (_, description) in NUMERIC_VARS.items():
        raw = os.getenv(var_name)
        if raw is None or raw.strip() == '':
            continue
        try:
            if int(raw) < 0:
                invalid.append(f"  - {var_name}: {description} (negativo: {raw})")
        except ValueError:
            invalid.append(f"  - {var_name}: {description} (no es entero: {raw})")

    if invalid:
        error_msg = "ERROR: VARIABLES DE ENTORNO INVÁLIDAS:\n" + "\n".join(invalid)
        get_logger(__name__).error(error_msg)
        raise EnvironmentError(error_msg)

    if LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
        get_logger(__name__).warning("LOG_LEVEL desconocido (%s), se usa WARNING", LOG_LEVEL)
    return True


def get_logger(name):
    """Devuelve un logger que escribe líneas 'NIVEL: mensaje' en stderr"""
    global _configured
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        root = logging.getLogger("factor")
        root.addHandler(handler)
        root.setLevel(getattr(logging, LOG_LEVEL, logging.WARNING))
        root.propagate = False
        _configured = True
    return logging.getLogger(f"factor.{name}")


def parallel_map(func, items, workers=None):
    """
    Aplica func a cada item, en paralelo si workers > 1.
    El resultado conserva el orden de items, así la salida es determinista.
    """
    items = list(items)
    if workers is None:
        workers = get_setting('FACTOR_THREADS')
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
