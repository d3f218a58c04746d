"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GroupError(Exception):
    """Base class for all errors raised by engelgroups."""


class NotAGroup(GroupError):
    def __init__(self, reason: str):
        super().__init__(f"not a group: {reason}")
        self.reason = reason


class OrderCapExceeded(GroupError):
    def __init__(self, order: int, cap: int, what: str = "group order"):
        super().__init__(f"{what} {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class UnknownCatalogName(GroupError):
    def __init__(self, name: str):
        super().__init__(f"unknown catalog group {name!r}")
        self.name = name


class GroupMismatch(GroupError):
    def __init__(self, detail: str = "operands belong to different groups"):
        super().__init__(detail)


class UnknownLabel(GroupError):
    def __init__(self, label: str, group_name: str = ""):
        where = f" in {group_name}" if group_name else ""
        super().__init__(f"no element labelled {label!r}{where}")
        self.label = label


class UnboundVariable(GroupError):
    def __init__(self, name: str):
        super().__init__(f"variable {name!r} is not bound")
        self.name = name


class NotASubgroup(GroupError):
    pass


class NotNormal(GroupError):
    pass


class GroupFileError(GroupError):
    """Malformed group description document."""


class WordSyntaxError(GroupError, ValueError):
    def __init__(self, position: int, expected: str, text: str = ""):
        super().__init__(f"syntax error at position {position}: expected {expected}")
        self.position = position
        self.expected = expected
        self.text = text
