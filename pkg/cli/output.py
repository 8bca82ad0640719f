"""
Formatos de salida: tabla, JSON y CSV
"""

import csv
import io
import json


def format_table(command, result):
    """
    Formatea un resultado como tabla de texto

    Args:
        command (str): Nombre del comando
        result (dict): Resultado del comando

    Returns:
        str: Texto con la cohomología grado a grado y el resto de campos
    """
    if not result:
        return "[ERROR] No hay resultado"

    text = f"{command.upper()}:\n\n"
    cohomology = result.get("cohomology")
    if cohomology is not None:
        text += f"{'grado':>6}  {'dimensión':>9}\n"
        for degree, dim in sorted(cohomology.items(), key=lambda item: int(item[0])):
            text += f"{degree:>6}  {dim:>9}\n"
        text += "\n"

    for key, value in result.items():
        if key == "cohomology":
            continue
        if isinstance(value, (dict, list)):
            value = json.dumps(value, ensure_ascii=False, sort_keys=True)
        text += f"- {key}: {value}\n"
    return text


def format_csv(result):
    """Una fila por grado con columnas degree,dimension; clave,valor si no hay cohomología"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    cohomology = result.get("cohomology")
    if cohomology is not None:
        writer.writerow(["degree", "dimension"])
        for degree, dim in sorted(cohomology.items(), key=lambda item: int(item[0])):
            writer.writerow([degree, dim])
    else:
        writer.writerow(["key", "value"])
        for key, value in result.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value, ensure_ascii=False, sort_keys=True)
            writer.writerow([key, value])
    return buffer.getvalue()


def format_json(document):
    return json.dumps(document, ensure_ascii=False, sort_keys=True, indent=2)


def render(output_format, command, document):
    """
    Texto final para stdout

    Args:
        output_format (str): table, json o csv
        command (str): Nombre del comando
        document (dict): {"command", "params", "result", "wall_time_ms", "artifact_version"}
    """
    if output_format == "json":
        return format_json(document)
    if output_format == "csv":
        return format_csv(document["result"])
    return format_table(command, document["result"])
