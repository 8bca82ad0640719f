#!/usr/bin/env python3
"""
Punto de entrada de fovec
Ejecuta un comando de la línea de órdenes y devuelve su código de salida
"""

import sys


def run_command():
    """
    Ejecuta el comando pedido en sys.argv

    Returns:
        int: 0 éxito, 1 verificación fallida, 2 parámetros inválidos
    """
    try:
        from cli import main
        return main()
    except KeyboardInterrupt:
        print("\n[INFO] Ejecución interrumpida por el usuario", file=sys.stderr)
        return 1
    except Exception as e:
        print(f"\n[ERROR] Error al iniciar fovec: {e}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(run_command())
