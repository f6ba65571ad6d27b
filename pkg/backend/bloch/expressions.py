"""Angle literals: ``pi``, ``e``, ``pi/100``, ``2pi/5``, ``sqrt(2/13)*pi``."""
import math
from functools import lru_cache

import pyparsing as pp

from .exceptions import AngleExpressionError

CONSTANTS = {'pi': math.pi, 'e': math.e}


def _fold_left(tokens):
    items = tokens[0]
    value = items[0]
    for operator, operand in zip(items[1::2], items[2::2]):
        if operator == '+':
            value += operand
        elif operator == '-':
            value -= operand
        elif operator == '*':
            value *= operand
        else:
            value /= operand
    return value


def _fold_power(tokens):
    items = tokens[0]
    value = items[-1]
    for operand in reversed(items[:-1:2]):
        value = operand ** value
    return value


def _sign(tokens):
    *operators, operand = tokens[0]
    if operators.count('-') % 2:
        return -operand
    return operand


@lru_cache(maxsize=None)
def _grammar():
    expression = pp.Forward()
    number = pp.Regex(r'(\d+\.\d*|\.\d+|\d+)([eE][-+]?\d+)?')
    number.set_parse_action(lambda tokens: float(tokens[0]))
    constant = pp.CaselessLiteral('pi') | pp.CaselessLiteral('e')
    constant.set_parse_action(lambda tokens: CONSTANTS[tokens[0].lower()])
    function_call = (
        pp.CaselessLiteral('sqrt').suppress()
        + pp.Suppress('(') + expression + pp.Suppress(')')
    )
    function_call.set_parse_action(lambda tokens: math.sqrt(tokens[0]))
    atom = function_call | constant
    operand = (number + pp.Optional(atom)) | atom
    operand.set_parse_action(lambda tokens: math.prod(tokens))
    expression <<= pp.infix_notation(operand, [
        ('^', 2, pp.OpAssoc.RIGHT, _fold_power),
        (pp.one_of('+ -'), 1, pp.OpAssoc.RIGHT, _sign),
        (pp.one_of('* /'), 2, pp.OpAssoc.LEFT, _fold_left),
        (pp.one_of('+ -'), 2, pp.OpAssoc.LEFT, _fold_left),
    ])
    return expression


def parse_angle(text):
    try:
        value = _grammar().parse_string(text.strip(), parse_all=True)[0]
    except pp.ParseBaseException as error:
        raise AngleExpressionError(
            f'Не удалось разобрать выражение угла {text!r}: {error}'
        ) from error
    except (ArithmeticError, ValueError) as error:
        raise AngleExpressionError(
            f'Недопустимое значение выражения {text!r}: {error}'
        ) from error
    if not math.isfinite(value):
        raise AngleExpressionError(f'Значение {text!r} не конечно')
    return float(value)


def parse_triple(text):
    parts = text.split(',')
    if len(parts) != 3:
        raise AngleExpressionError(
            f'Ожидалось три значения через запятую, получено {text!r}'
        )
    return tuple(parse_angle(part) for part in parts)
