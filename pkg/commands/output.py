"""
Output documents
JSON envelope, CSV tables and bare text renderings of command results
"""
import csv
import io
import json
from decimal import Decimal, localcontext
from fractions import Fraction

from series import MultiPoly, TruncatedSeries

SCHEMA = 'hookcalc/1'


def decimal_string(value, digits):
    with localcontext() as ctx:
        ctx.prec = digits + 20
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        return format(quotient.quantize(Decimal(1).scaleb(-digits)), 'f')


def jsonable(value, digits=None):
    """Exact values become strings; with digits, Fractions also carry a decimal rendering."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        if digits is not None:
            return {'exact': str(value), 'decimal': decimal_string(value, digits)}
        return str(value)
    if isinstance(value, MultiPoly):
        return str(value)
    if isinstance(value, TruncatedSeries):
        return value.to_dict()
    if hasattr(value, 'to_dict'):
        return jsonable(value.to_dict(), digits)
    if isinstance(value, dict):
        return {str(k): jsonable(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v, digits) for v in value]
    return str(value)


def document(command, result, digits=None):
    return {'schema': SCHEMA, 'command': command, 'result': jsonable(result, digits)}


def error_document(command, error):
    return {'schema': SCHEMA, 'command': command, 'error': error.to_dict()}


def render(command, outcome, fmt, digits=None):
    """The text written to stdout for one outcome."""
    if fmt == 'csv' and outcome.rows is not None:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(outcome.header or ['n', 'value'])
        for row in outcome.rows:
            writer.writerow([str(cell) for cell in row])
        return buffer.getvalue().rstrip('\n')
    if fmt == 'text':
        if outcome.text is not None:
            return outcome.text
        return _text(jsonable(outcome.result, digits))
    return json.dumps(document(command, outcome.result, digits), indent=2, sort_keys=False)


def _text(value):
    if isinstance(value, (list, tuple)) and all(not isinstance(v, (dict, list)) for v in value):
        return ','.join(str(v) for v in value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, indent=2)
    return str(value)
