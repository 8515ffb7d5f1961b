"""Machine-readable report documents."""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..classifier import BorelClassLabel, completeness_label
from ..expansion import JumpReport
from ..games.arena import GameGraph, MemoryStrategy, Objective, SolveResult
from ..hierarchy import ClassRef, HierarchyTable


class MembershipFlags(BaseModel):
    open: bool
    closed: bool
    sigma2: bool
    pi2: bool


class ClassificationDocument(BaseModel):
    """Classification of one automaton."""
    name: str = ""
    label: str
    memberships: MembershipFlags
    completeness: str
    evidence: Dict[str, Any] = Field(default_factory=dict)
    basis: Optional[List[str]] = None

    @classmethod
    def from_label(
        cls, c: BorelClassLabel, name: str = "", basis: Optional[List[str]] = None
    ) -> "ClassificationDocument":
        return cls(
            name=name,
            basis=basis,
            label=c.label.value,
            memberships=MembershipFlags(**c.memberships.to_dict()),
            completeness=completeness_label(c).render(),
            evidence=c.evidence.to_dict(),
        )


class JumpDocument(BaseModel):
    """Classes before and after alphabet expansion."""
    name: str = ""
    alphabet_before: List[str]
    alphabet_after: List[str]
    before: str
    after: str
    predicted: List[str]
    consistent: bool
    paper_claim_note: Optional[str] = None
    claim_disagrees: bool = False

    @classmethod
    def from_report(cls, report: JumpReport) -> "JumpDocument":
        return cls(
            name=report.name,
            alphabet_before=list(report.alphabet_before),
            alphabet_after=list(report.alphabet_after),
            before=report.before.label.value,
            after=report.after.label.value,
            predicted=[c.name for c in report.predicted],
            consistent=report.consistent,
            paper_claim_note=report.claim_note,
            claim_disagrees=report.claim_disagrees,
        )


class PredictionDocument(BaseModel):
    source: str
    predicted: List[str]

    @classmethod
    def from_refs(cls, source: ClassRef, predicted: List[ClassRef]) -> "PredictionDocument":
        return cls(source=source.name, predicted=[c.name for c in predicted])


class TableEntryDocument(BaseModel):
    source: str
    target: str
    kind: str


class TableDocument(BaseModel):
    max_level: int
    columns: List[str]
    entries: List[TableEntryDocument]

    @classmethod
    def from_table(cls, table: HierarchyTable) -> "TableDocument":
        return cls(
            max_level=table.max_finite_level,
            columns=[str(column) for column in table.columns],
            entries=[
                TableEntryDocument(source=e.source.name, target=e.target.name, kind=e.kind.value)
                for e in table.entries
            ],
        )


def _strategy_document(g: GameGraph, result: SolveResult, player: int) -> Dict[str, Any]:
    strategy = result.strategy(player)
    if isinstance(strategy, MemoryStrategy):
        entries = []
        for memory in sorted(strategy.moves):
            permutation, hit = strategy.records[memory]
            entries.append({
                "vertex": g.names[permutation[0]],
                "record": [g.names[v] for v in permutation],
                "hit": hit,
                "move": g.names[strategy.moves[memory]],
            })
        return {"memory": "latest-appearance-record", "memory_states": strategy.memory_states, "moves": entries}
    return {g.names[v]: g.names[w] for v, w in sorted(strategy.moves.items())}


class SolveDocument(BaseModel):
    """Winning regions and strategies; ``convention`` is set for lifted games."""
    objective: str
    win0: List[str]
    win1: List[str]
    strategy0: Dict[str, Any]
    strategy1: Dict[str, Any]
    verified: bool
    convention: Optional[str] = None

    @classmethod
    def from_result(
        cls,
        g: GameGraph,
        o: Objective,
        result: SolveResult,
        verified: bool,
        convention: Optional[str] = None,
    ) -> "SolveDocument":
        return cls(
            objective=o.describe(g),
            win0=g.render_set(result.win0),
            win1=g.render_set(result.win1),
            strategy0=_strategy_document(g, result, 0),
            strategy1=_strategy_document(g, result, 1),
            verified=verified,
            convention=convention,
        )


class MembershipDocument(BaseModel):
    name: str = ""
    word: str
    accepted: bool


class SuiteDocument(BaseModel):
    suite: str
    instances: int
    failures: int
    first_failure: Optional[str] = None


class SelftestDocument(BaseModel):
    seed: int
    passed: bool
    suites: List[SuiteDocument]


def to_json(document: BaseModel) -> str:
    """Deterministic JSON text of a document."""
    return json.dumps(document.model_dump(mode="json"), indent=2)
