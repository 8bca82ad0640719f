"""
Caché en disco de resultados exactos y configuración por entorno
"""

import hashlib
import json
import os
import sys
import tempfile

from dotenv import load_dotenv

from exactlin import __version__ as ARTIFACT_VERSION

# Cargar variables de entorno
load_dotenv()

LEVELS = ("quick", "full")


def get_cache_dir(cli_value=None):
    """
    Directorio de la caché: FOVEC_CACHE tiene prioridad sobre --cache-dir

    Args:
        cli_value (str): Valor de --cache-dir, o None

    Returns:
        str: Directorio, o None si la caché está desactivada
    """
    return os.getenv("FOVEC_CACHE") or cli_value


def get_default_level():
    """
    Nivel por defecto de verify-all

    Raises:
        ValueError: Si FOVEC_LEVEL no es quick ni full
    """
    level = os.getenv("FOVEC_LEVEL", "quick")
    if level not in LEVELS:
        raise ValueError(f"FOVEC_LEVEL debe ser uno de {LEVELS}, se recibió {level!r}")
    return level


def canonical_json(value):
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def cache_key(command, params, version=ARTIFACT_VERSION):
    """sha256 del JSON canónico de (comando, parámetros, versión)"""
    payload = canonical_json({"command": command, "params": params, "version": version})
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def load_result(cache_dir, key):
    """
    Lee un resultado guardado

    Returns:
        dict: Resultado, o None si no existe o no se puede leer
    """
    if not cache_dir:
        return None
    path = os.path.join(cache_dir, f"{key}.json")
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            entry = json.load(f)
        return entry["result"]
    except Exception as e:
        print(f"[ADVERTENCIA] Entrada de caché ilegible {path}: {e}", file=sys.stderr)
        return None


def save_result(cache_dir, key, command, params, result):
    """
    Guarda un resultado escribiendo un temporal y renombrándolo

    Returns:
        bool: True si se guardó correctamente, False en caso contrario
    """
    if not cache_dir:
        return False
    try:
        os.makedirs(cache_dir, exist_ok=True)
        entry = {"command": command, "params": params, "version": ARTIFACT_VERSION, "result": result}
        fd, temp_path = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(canonical_json(entry))
        os.replace(temp_path, os.path.join(cache_dir, f"{key}.json"))
        print(f"[OK] Resultado guardado en caché ({key[:12]})", file=sys.stderr)
        return True
    except Exception as e:
        print(f"[ERROR] Error al guardar en caché: {e}", file=sys.stderr)
        return False
