"""
Fixture-driven self-test over the worked examples
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

import structlog

from kuttaka_kit import congruence, kuttaka
from kuttaka_kit.codes import aryabhata, katapayadi, mula
from kuttaka_kit.errors import FixtureError, KuttakaKitError

logger = structlog.get_logger(__name__)


def _pairs(inputs: Dict[str, Any]) -> List[congruence.Congruence]:
    return [congruence.Congruence(residue, modulus) for residue, modulus in inputs['congruences']]


def _run_extended_euclid(inputs: Dict[str, Any]) -> Dict[str, Any]:
    g, s, t = kuttaka.extended_euclid(inputs['a'], inputs['b'])
    return {
        'g': g,
        's_mod_b': s % inputs['b'],
        'bezout_holds': s * inputs['a'] + t * inputs['b'] == g,
    }


def _run_mutual_division(inputs: Dict[str, Any]) -> Dict[str, Any]:
    chain = kuttaka.mutual_division(inputs['a'], inputs['b'])
    return {'quotients': list(chain.quotients), 'remainders': list(chain.remainders), 'gcd': chain.gcd}


def _run_choose_mati(inputs: Dict[str, Any]) -> Dict[str, Any]:
    mati, quotient = kuttaka.choose_mati(
        inputs['r_last'], inputs['d_prev'], inputs['c'], kuttaka.Parity(inputs['parity'])
    )
    return {'mati': mati, 'q': quotient}


def _run_reduce_valli(inputs: Dict[str, Any]) -> Dict[str, Any]:
    top, second = kuttaka.reduce_valli(inputs['valli'])
    return {'top': top, 'second': second}


def _run_solve(inputs: Dict[str, Any]) -> Dict[str, Any]:
    eq = kuttaka.Equation(inputs['a'], inputs['c'], inputs['b'])
    return kuttaka.solve(eq, inputs.get('retain')).to_dict()


OPERATIONS: Dict[str, Callable[[Dict[str, Any]], Any]] = {
    'mutual_division': _run_mutual_division,
    'choose_mati': _run_choose_mati,
    'reduce_valli': _run_reduce_valli,
    'solve': _run_solve,
    'extended_euclid': _run_extended_euclid,
    'mod_inverse': lambda inputs: congruence.mod_inverse(inputs['a'], inputs['m']),
    'inverse_pair': lambda inputs: list(kuttaka.inverse_pair(inputs['a'], inputs['b'])),
    'solve_pair': lambda inputs: congruence.solve_pair(*_pairs(inputs)).to_dict(),
    'solve_system': lambda inputs: congruence.solve_system(_pairs(inputs)).to_dict(),
    'aryabhata_decode': lambda inputs: aryabhata.aryabhata_decode(inputs['text']),
    'aryabhata_encode': lambda inputs: aryabhata.aryabhata_encode(
        inputs['n'], inputs.get('order', 'descending')
    ),
    'katapayadi_decode': lambda inputs: katapayadi.katapayadi_decode(
        inputs['word'], inputs.get('table', 'sanskrit')
    ),
    'katapayadi_encode': lambda inputs: katapayadi.katapayadi_encode(
        inputs['digits'], inputs.get('table', 'sanskrit'), inputs.get('chooser', 'first')
    ),
    'mula_apply': lambda inputs: mula.mula_apply(inputs['text']),
}


@dataclass
class VectorResult:
    """Outcome of one fixture vector"""

    id: str
    op: str
    passed: bool
    expected: Any
    actual: Any = None
    error: Optional[Dict[str, Any]] = None

    def to_dict(self):
        return {
            'id': self.id,
            'op': self.op,
            'passed': self.passed,
            'expected': self.expected,
            'actual': self.actual,
            'error': self.error,
        }


def _matches(expected: Any, actual: Any) -> bool:
    """Dict expectations compare only the keys they name"""
    if isinstance(expected, dict) and isinstance(actual, dict):
        return all(key in actual and actual[key] == value for key, value in expected.items())
    return expected == actual


class VectorRunner:
    """Load the fixture file and check every vector against the library"""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.vectors = self._load()

    def _load(self) -> List[Dict[str, Any]]:
        if not self.path.exists():
            raise FixtureError(f"fixture file not found: {self.path}")
        try:
            raw = self.path.read_text(encoding='utf-8')
            vectors = json.loads(raw) if raw.strip() else []
        except (OSError, json.JSONDecodeError) as exc:
            raise FixtureError(f"cannot read fixture file {self.path}: {exc}")

        if isinstance(vectors, dict):
            vectors = vectors.get('vectors', [])
        if not vectors:
            raise FixtureError("no vectors")
        return vectors

    def run_vector(self, index: int, vector: Dict[str, Any]) -> VectorResult:
        vector_id = vector.get('id', f"vector-{index + 1}")
        op = vector.get('op')
        expected = vector.get('expected')

        runner = OPERATIONS.get(op)
        if runner is None:
            return VectorResult(vector_id, str(op), False, expected,
                                error={'kind': 'unknown_op', 'message': f"unknown op {op!r}",
                                       'position': None})
        try:
            actual = runner(vector.get('inputs', {}))
        except KuttakaKitError as exc:
            return VectorResult(vector_id, op, False, expected, error=exc.to_dict())
        except (KeyError, TypeError, ValueError) as exc:
            logger.warning(f"Vector {vector_id} is malformed: {exc!r}")
            return VectorResult(vector_id, op, False, expected,
                                error={'kind': 'malformed_vector',
                                       'message': f"malformed inputs: {exc!r}",
                                       'position': None})

        passed = _matches(expected, actual)
        if not passed:
            logger.warning(f"Vector {vector_id} failed: expected {expected!r}, got {actual!r}")
        return VectorResult(vector_id, op, passed, expected, actual)

    def run(self) -> List[VectorResult]:
        results = [self.run_vector(index, vector) for index, vector in enumerate(self.vectors)]
        logger.info("selftest finished", total=len(results),
                    failed=sum(1 for result in results if not result.passed))
        return results
