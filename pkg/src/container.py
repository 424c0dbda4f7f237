from typing import Optional, Dict, Any, Tuple, Union
from pathlib import Path
import json
from datetime import datetime

from src.config import config
from src.logging_config import get_logger
from src.diophantine.descent import check_normal_conditions, solve_normal, validate_normal_input
from src.diophantine.legendre import (
    canonicalize,
    check_legendre_conditions,
    extract_necessity_witnesses,
    solve_general,
    validate_input,
)
from src.diophantine.models import (
    GeneralEquation,
    LegendreConditions,
    NormalConditions,
    NormalEquation,
    Solution,
    SolveResult,
)
from src.diophantine.report import (
    build_report,
    load_json_schema,
    validate_report,
)
from src.diophantine.solutions import is_primitive, is_solution

Equation = Union[NormalEquation, GeneralEquation]
Conditions = Union[NormalConditions, LegendreConditions]


class Container:
    """Service container wiring configuration, solver and reports."""

    def __init__(self, max_coeff: Optional[int] = None):
        self.logger = get_logger('cli')
        self.max_coeff = max_coeff if max_coeff is not None else config.solver.max_coeff

    def parse_equation(self, a: int, b: int, c: Optional[int] = None) -> Equation:
        """Build and validate the equation; c=None selects the normal form."""
        if c is None:
            return validate_normal_input(a, b, self.max_coeff)
        return validate_input(GeneralEquation(a=a, b=b, c=c), self.max_coeff)

    def solve(self, eq: Equation) -> SolveResult:
        if isinstance(eq, NormalEquation):
            result = solve_normal(eq, self.max_coeff)
        else:
            result = solve_general(eq, self.max_coeff)
        self.logger.info(f"{eq}: {'solvable' if result.solvable else 'no solution'}")
        return result

    def check(self, eq: Equation) -> Conditions:
        """Residue conditions; general equations are checked in canonical form."""
        if isinstance(eq, NormalEquation):
            return check_normal_conditions(eq)
        return check_legendre_conditions(canonicalize(eq).equation)

    def verify(self, eq: Equation, x: int, y: int, z: int) -> Tuple[bool, Optional[Conditions]]:
        """Whether (x, y, z) is a nontrivial solution, with necessity witnesses when primitive."""
        triple = (abs(x), abs(y), abs(z))
        if not is_solution(eq.coefficients(), triple):
            self.logger.info(f"{triple} does not solve {eq}")
            return False, None
        solution = Solution(x=triple[0], y=triple[1], z=triple[2])
        if not is_primitive(solution):
            return True, None
        return True, extract_necessity_witnesses(eq, solution)

    def build_report(self, eq: Equation, result: SolveResult, residue_tables: bool = False) -> Dict[str, Any]:
        return build_report(eq, result, residue_tables)

    def load_schema(self) -> Dict[str, Any]:
        """Load and return the JSON schema for validation."""
        return load_json_schema(config.directories.schema_path)

    def validate_report(self, report: Dict[str, Any], schema: Dict[str, Any]) -> bool:
        """Validate a report against the schema."""
        return validate_report(report, schema)

    def save_report(self, report: Dict[str, Any], timestamp: Optional[datetime] = None) -> Path:
        """Save a report to a JSON file stamped in the configured timezone."""
        if timestamp is None:
            timestamp = datetime.now(config.tz)
        output_dir = Path(config.directories.output_dir)
        output_dir.mkdir(parents=True, exist_ok=True)

        coefficients = "_".join(report["equation"].values())
        filename = f"report_{coefficients}_{timestamp.strftime('%Y%m%d_%H%M%S')}.json"
        output_path = output_dir / filename

        with open(output_path, 'w', encoding='utf-8') as f:
            json.dump(report, f, indent=2, ensure_ascii=False)

        self.logger.info(f"Saved report to {output_path}")
        return output_path
