"""Core vocabulary: grades, leagues, roles, officials, fixtures, assignments.

Everything here is an immutable value object. Construction validates, ids are
normalized to uppercase, and the only behavior is ordering and formatting.
"""

from __future__ import annotations

import datetime as dt
import re
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering

from .errors import MalformedIdError

CATEGORY_MIN = 1
CATEGORY_MAX = 10

_OFFICIAL_ID_RE = re.compile(r"^[A-Za-z][0-9]+$")
_FIXTURE_ID_RE = re.compile(r"^[A-Za-z]+[0-9]+$")


def parse_official_id(raw: str) -> str:
    """Normalize an official id such as "r001" to its stored form "R001".

    Accepts a single letter prefix followed by digits, case-insensitively.
    Raises MalformedIdError for any other shape.
    """
    token = (raw or "").strip()
    if not _OFFICIAL_ID_RE.match(token):
        raise MalformedIdError(
            f"malformed official id {raw!r}: expected one letter followed by digits"
        )
    return token.upper()


def parse_fixture_id(raw: str) -> str:
    """Normalize a fixture id such as "spl001" to "SPL001" (letters then digits)."""
    token = (raw or "").strip()
    if not _FIXTURE_ID_RE.match(token):
        raise MalformedIdError(
            f"malformed fixture id {raw!r}: expected letters followed by digits"
        )
    return token.upper()


@dataclass(frozen=True)
class Category:
    """Referee qualification grade. 1 is the strongest grade, 10 the weakest.

    A grade qualifies for everything a weaker grade qualifies for, so the
    quality order runs opposite to the numeric order.
    """

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise ValueError(f"category grade must be an integer, got {self.value!r}")
        if not CATEGORY_MIN <= self.value <= CATEGORY_MAX:
            raise ValueError(
                f"category grade must be in {CATEGORY_MIN}..{CATEGORY_MAX}, got {self.value}"
            )

    def outranks_or_equals(self, other: "Category") -> bool:
        """True when this grade is at least as strong as `other`."""
        return self.value <= other.value


def outranks_or_equals(a: Category, b: Category) -> bool:
    """Quality comparison between grades: a qualifies wherever b does."""
    return a.outranks_or_equals(b)


@total_ordering
class ExperienceGrade(Enum):
    """Three-step experience rating; High > Medium > Low."""

    HIGH = "High"
    MEDIUM = "Medium"
    LOW = "Low"

    @property
    def strength(self) -> int:
        return _EXPERIENCE_STRENGTH[self]

    def __lt__(self, other: object):
        if not isinstance(other, ExperienceGrade):
            return NotImplemented
        return self.strength < other.strength


_EXPERIENCE_STRENGTH = {
    ExperienceGrade.LOW: 0,
    ExperienceGrade.MEDIUM: 1,
    ExperienceGrade.HIGH: 2,
}


def parse_experience(raw: str) -> ExperienceGrade:
    token = (raw or "").strip().casefold()
    for grade in ExperienceGrade:
        if grade.value.casefold() == token:
            return grade
    raise ValueError(f"unknown experience grade {raw!r}: expected High, Medium or Low")


class LeagueType(Enum):
    """League tiers in canonical (allocation and display) order."""

    SPL = "SPL"
    SFL1 = "SFL1"
    SFL2 = "SFL2"
    SFL3 = "SFL3"
    JUNIOR = "Junior"
    AMATEUR = "Amateur"
    YOUTH = "Youth"

    @property
    def order(self) -> int:
        return _LEAGUE_ORDER[self]


CANONICAL_LEAGUES: tuple[LeagueType, ...] = tuple(LeagueType)
_LEAGUE_ORDER = {league: i for i, league in enumerate(CANONICAL_LEAGUES)}

_LEAGUE_TOKENS = {
    "spl": LeagueType.SPL,
    "sfl1": LeagueType.SFL1,
    "sfl2": LeagueType.SFL2,
    "sfl3": LeagueType.SFL3,
    "amateur": LeagueType.AMATEUR,
}


def parse_league(raw: str) -> LeagueType:
    """Parse a league token; tolerant of spacing, case, and youth age bands.

    "SFL 1" and "sfl1" both map to SFL1; "Youth U11".."Youth U21" collapse
    into Youth; "Junior Football" counts as Junior.
    """
    squashed = (raw or "").strip().casefold().replace(" ", "")
    if squashed.startswith("youth"):
        return LeagueType.YOUTH
    if squashed.startswith("junior"):
        return LeagueType.JUNIOR
    league = _LEAGUE_TOKENS.get(squashed)
    if league is None:
        raise ValueError(f"unknown league type {raw!r}")
    return league


class Role(Enum):
    """Match roles in canonical stage order (referees are assigned first)."""

    REFEREE = "Referee"
    ASSISTANT_REFEREE_1 = "Assistant Referee 1"
    ASSISTANT_REFEREE_2 = "Assistant Referee 2"
    FOURTH_OFFICIAL = "Fourth Official"
    OBSERVER = "Observer"

    @property
    def stage(self) -> int:
        return _ROLE_STAGE[self]


ROLE_STAGES: tuple[Role, ...] = tuple(Role)
_ROLE_STAGE = {role: i for i, role in enumerate(ROLE_STAGES)}

_ROLE_TOKENS = {
    "referee": Role.REFEREE,
    "assistantreferee1": Role.ASSISTANT_REFEREE_1,
    "ar1": Role.ASSISTANT_REFEREE_1,
    "assistantreferee2": Role.ASSISTANT_REFEREE_2,
    "ar2": Role.ASSISTANT_REFEREE_2,
    "fourthofficial": Role.FOURTH_OFFICIAL,
    "observer": Role.OBSERVER,
}


def parse_role(raw: str) -> Role:
    """Parse a role name case-insensitively; accepts "Assistant Referee 1" and "AR1"."""
    squashed = (raw or "").strip().casefold().replace(" ", "")
    role = _ROLE_TOKENS.get(squashed)
    if role is None:
        raise ValueError(f"unknown role {raw!r}")
    return role


def date_from_parts(day: int, month: int, year: int) -> dt.date:
    """Build a date from day/month/year entries; two-digit years mean 2000+yy."""
    if 0 <= year < 100:
        year += 2000
    return dt.date(year, month, day)


@dataclass(frozen=True)
class Official:
    """A registered person: referee-qualified, observer-qualified, or both."""

    id: str
    name: str
    category: Category | None = None
    referee_experience: ExperienceGrade | None = None
    observer_experience: ExperienceGrade | None = None
    username: str = ""
    password_digest: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "id", parse_official_id(self.id))
        if not self.name.strip():
            raise ValueError("official name must not be empty")
        if self.category is None and self.observer_experience is None:
            raise ValueError(
                f"official {self.id} needs a referee category or observer experience"
            )
        if self.category is not None and self.referee_experience is None:
            raise ValueError(
                f"official {self.id} holds a category but no referee experience"
            )

    @property
    def is_referee(self) -> bool:
        return self.category is not None

    @property
    def is_observer(self) -> bool:
        return self.observer_experience is not None


@dataclass(frozen=True)
class Fixture:
    """A scheduled match: two teams at a location on a date and time."""

    id: str
    league: LeagueType
    home_team: str
    away_team: str
    location: str
    date: dt.date
    time: dt.time

    def __post_init__(self) -> None:
        object.__setattr__(self, "id", parse_fixture_id(self.id))
        if not self.home_team.strip() or not self.away_team.strip():
            raise ValueError(f"fixture {self.id}: team names must not be empty")
        if self.home_team == self.away_team:
            raise ValueError(f"fixture {self.id}: a team cannot play itself")


@dataclass(frozen=True)
class Assignment:
    """One official serving one role at one fixture."""

    fixture_id: str
    official_id: str
    role: Role

    def __post_init__(self) -> None:
        object.__setattr__(self, "fixture_id", parse_fixture_id(self.fixture_id))
        object.__setattr__(self, "official_id", parse_official_id(self.official_id))


@dataclass(frozen=True)
class AvailabilityRecord:
    """An official's positive declaration of availability for one date."""

    official_id: str
    date: dt.date

    def __post_init__(self) -> None:
        object.__setattr__(self, "official_id", parse_official_id(self.official_id))
