'''
Parser for the point set descriptor language::

    prog ALPHA [BETA]
    union { DESCRIPTOR ; DESCRIPTOR ; ... }
    puncture { DESCRIPTOR } X1 X2 ...
    perturb { prog ALPHA [BETA] } offsets=O1,O2,...
    perturb { prog ALPHA [BETA] } file=offsets.tsv
    explicit X1 X2 ...
    explicit file=points.tsv
    affine { DESCRIPTOR } FACTOR SHIFT
    empty

Files hold one number per line (further tab separated columns and ``#``
comments are ignored) and are resolved against the directory given to
:func:`parse_descriptor`.
'''
import os
import re

import numpy as np

from gaussampling.point_sets.descriptors import (Empty, Explicit, Perturbation, Progression,
                                                 Puncture, Union, affine)
from gaussampling.utils.exceptions import DescriptorParseError, InvalidParameterError

_TOKEN = re.compile(r'\s*(?:([{};])|([^\s{};]+))')


def _tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            break
        token = match.group(1) or match.group(2)
        if token is not None:
            tokens.append((token, match.start(match.lastindex) + 1))
        position = match.end()
    return tokens


class _Parser:

    def __init__(self, text, base_dir):
        self.tokens = _tokenize(text)
        self.index = 0
        self.base_dir = base_dir
        self.end_column = len(text) + 1

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None, self.end_column

    def take(self, what='a token'):
        token, column = self.peek()
        if token is None:
            raise DescriptorParseError("expected %s, found end of input" % what, column)
        self.index += 1
        return token, column

    def expect(self, literal):
        token, column = self.take(repr(literal))
        if token != literal:
            raise DescriptorParseError("expected %r, found %r" % (literal, token), column)

    def number(self, what='a number'):
        token, column = self.take(what)
        try:
            return float(token)
        except ValueError:
            raise DescriptorParseError("expected %s, found %r" % (what, token), column)

    def trailing_numbers(self):
        values = []
        while True:
            token, _ = self.peek()
            if token is None or token in '{};' or '=' in token:
                return values
            values.append(self.number())

    def braced(self):
        self.expect('{')
        inner = self.descriptor()
        self.expect('}')
        return inner

    def read_file(self, token, column):
        path = token.split('=', 1)[1]
        if not path:
            raise DescriptorParseError("empty file name", column)
        if self.base_dir and not os.path.isabs(path):
            path = os.path.join(self.base_dir, path)
        try:
            return np.loadtxt(path, comments='#', usecols=0, ndmin=1).tolist()
        except OSError:
            raise DescriptorParseError("cannot read %s" % path, column)
        except ValueError as exc:
            raise DescriptorParseError("malformed numbers in %s: %s" % (path, exc), column)

    def descriptor(self):
        keyword, column = self.take('a descriptor keyword')
        try:
            return self._build(keyword, column)
        except InvalidParameterError as exc:
            raise DescriptorParseError(str(exc), column)

    def _build(self, keyword, column):
        if keyword == 'prog':
            alpha = self.number('a step')
            rest = self.trailing_numbers()
            if len(rest) > 1:
                raise DescriptorParseError("prog takes a step and an optional offset", column)
            return Progression(alpha, rest[0] if rest else 0.0)
        if keyword == 'empty':
            return Empty()
        if keyword == 'union':
            self.expect('{')
            parts = [self.descriptor()]
            while self.peek()[0] == ';':
                self.take()
                parts.append(self.descriptor())
            self.expect('}')
            return Union(tuple(parts))
        if keyword == 'puncture':
            base = self.braced()
            return Puncture(base, tuple(self.trailing_numbers()))
        if keyword == 'affine':
            base = self.braced()
            factor = self.number('a factor')
            shift = self.number('a shift')
            return affine(base, factor, shift)
        if keyword == 'perturb':
            base = self.braced()
            if not isinstance(base, Progression):
                raise DescriptorParseError("perturb needs a prog base", column)
            token, where = self.take('offsets= or file=')
            if token.startswith('file='):
                offsets = self.read_file(token, where)
            elif token.startswith('offsets='):
                try:
                    offsets = [float(x) for x in token[len('offsets='):].split(',') if x]
                except ValueError:
                    raise DescriptorParseError("malformed offsets %r" % token, where)
            else:
                raise DescriptorParseError("expected offsets= or file=, found %r" % token, where)
            return Perturbation(base, tuple(offsets))
        if keyword == 'explicit':
            token, where = self.peek()
            if token is not None and token.startswith('file='):
                self.take()
                return Explicit(tuple(self.read_file(token, where)))
            return Explicit(tuple(self.trailing_numbers()))
        raise DescriptorParseError("unknown descriptor %r" % keyword, column)


def parse_descriptor(text, base_dir=None):
    '''Parses a descriptor into a :class:`PointSet1D`.

    :raises: :class:`DescriptorParseError` carrying the 1-based column of
             the offending token.
    '''
    parser = _Parser(text, base_dir)
    result = parser.descriptor()
    token, column = parser.peek()
    if token is not None:
        raise DescriptorParseError("unexpected %r after the descriptor" % token, column)
    return result
