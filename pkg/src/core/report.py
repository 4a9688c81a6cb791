"""
Verification reports
Check operations never raise on a failing identity; they record it here
"""

import json
from dataclasses import asdict, dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional


@dataclass
class CheckEntry:
    identity: str
    status: str
    witness: Optional[str] = None


@dataclass
class CheckReport:
    """Outcome of one verification suite"""
    check: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    started: str = field(default_factory=lambda: datetime.now().isoformat())
    finished: Optional[str] = None
    entries: List[CheckEntry] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def record(self, identity: str, ok: bool, witness: Optional[str] = None) -> bool:
        self.entries.append(CheckEntry(identity, 'pass' if ok else 'fail', witness))
        return ok

    def note(self, message: str):
        self.notes.append(message)

    def extend(self, other: 'CheckReport', prefix: str = ''):
        """Fold another report's entries and notes into this one"""
        for entry in other.entries:
            self.entries.append(CheckEntry(prefix + entry.identity, entry.status, entry.witness))
        self.notes.extend(other.notes)

    def finish(self) -> 'CheckReport':
        self.finished = datetime.now().isoformat()
        return self

    @property
    def failures(self) -> List[CheckEntry]:
        return [entry for entry in self.entries if entry.status != 'pass']

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> Dict[str, int]:
        failed = len(self.failures)
        return {'total': len(self.entries), 'passed': len(self.entries) - failed, 'failed': failed}

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['summary'] = self.summary()
        return data

    def to_json_lines(self) -> str:
        lines = [json.dumps(asdict(entry)) for entry in self.entries]
        lines.append(json.dumps({
            'check': self.check,
            'summary': self.summary(),
            'notes': self.notes,
        }))
        return '\n'.join(lines)
