'''
Run configurations for the management commands.

A run configuration is a flat ``key = value`` file with ``[section]``
headers. ``[run]`` holds ``command``, ``out``, ``seed`` and ``threads``; the
section named after the command holds its parameters::

    [run]
    command = annihilator
    out = results
    seed = 7

    [annihilator]
    target = prog 2 0.3
    a = 1
    epsilon = 0.25

Command-line flags override the file. Every parse error is reported with
its line and column.
'''
import configparser
import math
import os
import re
from dataclasses import dataclass, field, replace

from gaussampling.point_sets.parsing import parse_descriptor
from gaussampling.utils.conf import setting
from gaussampling.utils.exceptions import ConfigError, DescriptorParseError

RUN_SECTION = 'run'
RUN_KEYS = ('command', 'out', 'seed', 'threads')
DEFAULT_SEED = 0
#: default of parameters that must be present
REQUIRED = object()


def _real(text):
    '''A float; ``pi`` is accepted for the usual shape parameter.'''
    if text.strip().lower() == 'pi':
        return math.pi
    return float(text)


def _column(line):
    return len(line) - len(line.lstrip()) + 1


def _locate(lines, section, key):
    '''Line and column of `key` inside `section`, ``(None, None)`` if absent.'''
    current = None
    pattern = re.compile(r'\s*%s\s*[=:]' % re.escape(key), re.IGNORECASE)
    for number, line in enumerate(lines, 1):
        header = re.match(r'\s*\[([^\]]+)\]', line)
        if header:
            current = header.group(1).strip().replace('-', '_')
        elif current == section.replace('-', '_') and pattern.match(line):
            return number, _column(line)
    return None, None


def _parser():
    parser = configparser.ConfigParser(delimiters=('=',), comment_prefixes=('#',),
                                       inline_comment_prefixes=None, interpolation=None,
                                       strict=True, empty_lines_in_values=False)
    parser.optionxform = str.lower
    return parser


def _read(text, source):
    parser = _parser()
    lines = text.splitlines()
    try:
        parser.read_string(text, source=source)
    except configparser.MissingSectionHeaderError as exc:
        line = lines[exc.lineno - 1]
        raise ConfigError("parameters must follow a [section] header", exc.lineno, _column(line))
    except (configparser.DuplicateSectionError, configparser.DuplicateOptionError) as exc:
        line = lines[exc.lineno - 1]
        raise ConfigError(exc.message.split(':')[-1].strip() or 'duplicate entry',
                          exc.lineno, _column(line))
    except configparser.ParsingError as exc:
        number = exc.errors[0][0]
        line = lines[number - 1]
        raise ConfigError("expected 'key = value' or '[section]'", number, _column(line))
    return parser, lines


class Parameters:
    '''Typed access to one section; failures name the key and its line.'''

    def __init__(self, section, values, base_dir='.', lines=()):
        self.section = section
        self.values = dict(values)
        self.base_dir = base_dir
        self.lines = list(lines)

    def error(self, key, message):
        line, column = _locate(self.lines, self.section, key)
        return ConfigError('[%s] %s: %s' % (self.section, key, message), line, column)

    def __contains__(self, key):
        return key in self.values

    def raw(self, key, default=REQUIRED):
        if key in self.values:
            return self.values[key]
        if default is REQUIRED:
            raise self.error(key, 'missing')
        return default

    def _convert(self, key, default, convert, what):
        if key not in self.values and default is not REQUIRED:
            return default
        text = self.raw(key)
        try:
            return convert(text)
        except ValueError:
            raise self.error(key, 'expected %s, got %r' % (what, text))

    def number(self, key, default=REQUIRED):
        return self._convert(key, default, _real, 'a number')

    def integer(self, key, default=REQUIRED):
        return self._convert(key, default, int, 'an integer')

    def numbers(self, key, default=REQUIRED, count=None):
        values = self._convert(key, default, lambda text: [_real(t) for t in text.split()],
                               'numbers separated by spaces')
        if count is not None and len(values) != count:
            raise self.error(key, 'expected %d numbers, got %d' % (count, len(values)))
        return list(values)

    def integers(self, key, default=REQUIRED, count=None):
        values = self._convert(key, default, lambda text: [int(t) for t in text.split()],
                               'integers separated by spaces')
        if count is not None and len(values) != count:
            raise self.error(key, 'expected %d integers, got %d' % (count, len(values)))
        return list(values)

    def descriptor(self, key, default=REQUIRED):
        '''A point set descriptor; ``file=`` references resolve against the
        configuration directory.'''
        text = self.raw(key, default)
        try:
            return parse_descriptor(text, self.base_dir)
        except DescriptorParseError as exc:
            line, column = _locate(self.lines, self.section, key)
            raise ConfigError('[%s] %s: %s' % (self.section, key, exc), line, column)

    def path(self, key):
        '''An existing file, relative to the configuration directory.'''
        path = os.path.join(self.base_dir, self.raw(key))
        if not os.path.isfile(path):
            raise self.error(key, 'no such file %r' % path)
        return path


@dataclass(frozen=True)
class RunConfig:
    command: str
    out: str = '.'
    seed: int = DEFAULT_SEED
    threads: int = 1
    params: Parameters = field(default=None, compare=False)

    def with_overrides(self, out=None, seed=None, threads=None, assignments=()):
        '''Applies command-line flags; `assignments` are ``key=value`` strings.'''
        params = Parameters(self.params.section, self.params.values, self.params.base_dir,
                            self.params.lines)
        for number, assignment in enumerate(assignments, 1):
            key, sep, value = assignment.partition('=')
            if not sep or not key.strip():
                raise ConfigError("--set expects key=value, got %r" % assignment, number, 1)
            params.values[key.strip().lower()] = value.strip()
        return replace(self,
                       out=self.out if out is None else out,
                       seed=self.seed if seed is None else int(seed),
                       threads=self.threads if threads is None else int(threads),
                       params=params)


def parse_run_config(text, command=None, base_dir='.', source='<config>'):
    '''Parses a run configuration.

    :param command: The command the caller runs; it overrides ``[run]
                    command`` and selects the parameter section.
    :raises: :class:`ConfigError` with line and column.
    '''
    parser, lines = _read(text, source)
    run = parser[RUN_SECTION] if parser.has_section(RUN_SECTION) else {}
    for key in run:
        if key not in RUN_KEYS:
            line, column = _locate(lines, RUN_SECTION, key)
            raise ConfigError("unknown [run] key %r" % key, line, column)
    command = command or run.get('command')
    if not command:
        raise ConfigError("no command given: set [run] command", 1, 1)
    section = command.replace('-', '_')
    values = {}
    for name in (command, section):
        if parser.has_section(name):
            values.update(parser[name])
    params = Parameters(section, values, base_dir, lines)
    run_params = Parameters(RUN_SECTION, run, base_dir, lines)
    return RunConfig(section,
                     out=run_params.raw('out', '.'),
                     seed=run_params.integer('seed', DEFAULT_SEED),
                     threads=run_params.integer('threads', setting('DEFAULT_THREADS', 1)),
                     params=params)


def load_run_config(path, command=None):
    '''Reads and parses the configuration file at `path`.'''
    if not os.path.isfile(path):
        raise ConfigError("configuration file %r does not exist" % path)
    with open(path, encoding='utf-8') as fio:
        text = fio.read()
    return parse_run_config(text, command, os.path.dirname(os.path.abspath(path)), path)


def empty_run_config(command):
    '''The configuration used when no ``--config`` is given.'''
    return RunConfig(command.replace('-', '_'),
                     threads=setting('DEFAULT_THREADS', 1),
                     params=Parameters(command.replace('-', '_'), {}))
