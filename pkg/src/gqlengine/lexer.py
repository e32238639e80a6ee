"""Tokenizer for the supported GraphQL subset.

Whitespace, commas and ``#`` comments are insignificant and produce no
tokens. A run of comment lines that ends on the line directly above a token
is remembered on that token (``Token.comment``) so schema definitions can
pick it up as a description.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

NAME = "Name"
STRING = "String"
INT = "Int"
PUNCTUATOR = "Punctuator"
EOF = "EOF"

PUNCTUATORS = frozenset("{}()[]:!")

_NAME_START = frozenset("_abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
_NAME_CONT = _NAME_START | frozenset("0123456789")
_DIGITS = frozenset("0123456789")
_SIMPLE_ESCAPES = {'"': '"', "\\": "\\", "/": "/", "b": "\b", "f": "\f",
                   "n": "\n", "r": "\r", "t": "\t"}


class ParseError(Exception):
    """Syntax error at a 1-based line/column position of the source."""

    def __init__(self, message: str, line: int, column: int, expected: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(f"{message} (line {line}, column {column})")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int
    value: Any = None
    comment: str | None = None

    def is_punct(self, char: str) -> bool:
        return self.kind == PUNCTUATOR and self.text == char

    def describe(self) -> str:
        if self.kind == EOF:
            return "end of input"
        return f"{self.kind.lower()} {self.text!r}" if self.kind != PUNCTUATOR else repr(self.text)


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    line = 1
    line_start = 0
    n = len(source)
    comments: list[str] = []
    comment_end_line = 0
    last_token_line = 0

    def err(msg, at):
        raise ParseError(msg, line, at - line_start + 1)

    while True:
        # skip ignored characters, collecting comment lines
        while pos < n:
            ch = source[pos]
            if ch == "\n" or ch == "\r":
                if ch == "\r" and pos + 1 < n and source[pos + 1] == "\n":
                    pos += 1
                pos += 1
                line += 1
                line_start = pos
            elif ch in " \t,\ufeff":
                pos += 1
            elif ch == "#":
                end = pos
                while end < n and source[end] not in "\r\n":
                    end += 1
                if line != last_token_line:
                    if comment_end_line != line - 1:
                        comments = []
                    comments.append(source[pos + 1:end].strip())
                    comment_end_line = line
                pos = end
            else:
                break

        column = pos - line_start + 1
        comment = None
        if comments and comment_end_line == line - 1:
            comment = "\n".join(comments)
        comments = []
        last_token_line = line

        if pos >= n:
            tokens.append(Token(EOF, "", line, column, comment=comment))
            return tokens

        ch = source[pos]
        start = pos
        if ch in PUNCTUATORS:
            pos += 1
            tokens.append(Token(PUNCTUATOR, ch, line, column, comment=comment))
        elif ch in _NAME_START:
            while pos < n and source[pos] in _NAME_CONT:
                pos += 1
            text = source[start:pos]
            tokens.append(Token(NAME, text, line, column, comment=comment))
        elif ch in _DIGITS or ch == "-":
            pos += 1
            if ch == "-" and (pos >= n or source[pos] not in _DIGITS):
                err("expected digit after '-'", pos)
            first = pos if ch == "-" else start
            while pos < n and source[pos] in _DIGITS:
                pos += 1
            if pos - first > 1 and source[first] == "0":
                err("integer literal must not have leading zeros", start)
            if pos < n and (source[pos] in ".eE" or source[pos] in _NAME_START):
                if source[pos] in ".eE":
                    err("float literals are not supported", start)
                err(f"invalid character {source[pos]!r} after number", pos)
            text = source[start:pos]
            tokens.append(Token(INT, text, line, column, value=int(text), comment=comment))
        elif ch == '"':
            if source.startswith('"""', pos):
                err("block strings are not supported", pos)
            pos += 1
            chars = []
            while True:
                if pos >= n or source[pos] in "\r\n":
                    err("unterminated string", start)
                c = source[pos]
                if c == '"':
                    pos += 1
                    break
                if c == "\\":
                    esc = source[pos + 1] if pos + 1 < n else ""
                    if esc in _SIMPLE_ESCAPES:
                        chars.append(_SIMPLE_ESCAPES[esc])
                        pos += 2
                    elif esc == "u":
                        digits = source[pos + 2:pos + 6]
                        if len(digits) != 4 or any(d not in "0123456789abcdefABCDEF" for d in digits):
                            err("invalid unicode escape", pos)
                        chars.append(chr(int(digits, 16)))
                        pos += 6
                    else:
                        err(f"invalid escape sequence \\{esc}", pos)
                    continue
                if ord(c) < 0x20 and c != "\t":
                    err("invalid control character in string", pos)
                chars.append(c)
                pos += 1
            tokens.append(Token(STRING, source[start:pos], line, column,
                                value="".join(chars), comment=comment))
        else:
            err(f"unexpected character {ch!r}", pos)
