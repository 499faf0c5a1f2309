'''
The base class of every diagnostic command and the artifact directory it
writes to.
'''
import os

from django.core.management.base import BaseCommand, CommandError

from gaussampling.cli.runconfig import empty_run_config, load_run_config
from gaussampling.loggers import error_log, run_log
from gaussampling.utils.error_codes import exit_code_for
from gaussampling.utils.exceptions import GaussSamplingError
from gaussampling.utils.writers import CSVWriter, write_report


class Artifacts(object):
    '''Files written by one run, all inside the output directory.'''

    def __init__(self, out_dir):
        self.out_dir = out_dir
        self.paths = []

    def _open(self, name):
        os.makedirs(self.out_dir, exist_ok=True)
        path = os.path.join(self.out_dir, name)
        self.paths.append(path)
        run_log.info("writing %s", path)
        return open(path, 'w', encoding='utf-8', newline='')

    def csv(self, name, header, rows):
        with self._open(name) as fio:
            writer = CSVWriter(fio)
            writer.writerow(header)
            writer.writerows(rows)

    def report(self, name, report):
        with self._open(name) as fio:
            write_report(fio, report)

    def text(self, name, text):
        with self._open(name) as fio:
            fio.write(text)


class ExperimentCommand(BaseCommand):
    '''Reads a run configuration, runs one operation chain and writes its
    artifacts.

    Subclasses set :attr:`explanation` and :attr:`reference` and implement
    :meth:`run`, which receives the :class:`RunConfig` and an
    :class:`Artifacts` directory and returns a one-line summary.
    '''
    explanation = ''
    reference = ''

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def add_arguments(self, parser):
        parser.add_argument('--config', help='Run configuration file.')
        parser.add_argument('--out', help='Output directory, overriding [run] out.')
        parser.add_argument('--seed', type=int, help='Seed of the randomised checks.')
        parser.add_argument('--threads', type=int, help='Worker threads.')
        parser.add_argument('--explain', action='store_true',
                            help='Print the statement the command checks and exit.')
        parser.add_argument('--set', action='append', default=[], dest='assignments',
                            metavar='KEY=VALUE', help='Override one module parameter.')

    def load_config(self, options):
        if options.get('config'):
            config = load_run_config(options['config'], self.command_name)
        else:
            config = empty_run_config(self.command_name)
        return config.with_overrides(options.get('out'), options.get('seed'),
                                     options.get('threads'), options.get('assignments') or ())

    def handle(self, *args, **options):
        '''Runs the command; library errors become a :class:`CommandError`
        carrying the documented exit code.'''
        if options.get('explain'):
            self.stdout.write(self.explain_text())
            return
        try:
            config = self.load_config(options)
            run_log.info("%s: out=%s seed=%d threads=%d", self.command_name, config.out,
                         config.seed, config.threads)
            artifacts = Artifacts(config.out)
            summary = self.run(config, artifacts)
        except GaussSamplingError as exc:
            code = exit_code_for(exc)
            error_log.error("%s exited with %d: %s", self.command_name, code, exc)
            raise CommandError('%s: %s' % (type(exc).__name__, exc), returncode=code)
        for path in artifacts.paths:
            self.stdout.write(path)
        if summary:
            self.stdout.write(summary)

    def explain_text(self):
        '''The checked statement followed by a ``Reference:`` line.'''
        return '%s\nReference: %s' % (self.explanation, self.reference)

    def run(self, config, artifacts):
        raise NotImplementedError


TREND_HEADER = ('N', 'A_est', 'B_est', 'ratio_prev')


def trend_rows(trend):
    return [(row.N, row.A_est, row.B_est, row.ratio_prev) for row in trend.rows]


def trend_report(trend):
    '''The diagnostics every trend report carries.'''
    return {
        'sizes': [row.N for row in trend.rows],
        'decay': trend.decay,
        'spread': trend.spread,
        'max_ratio': trend.max_ratio,
        'strictly_decreasing': trend.strictly_decreasing(),
    }


def trend_target(params, trend):
    '''Compares a trend with the optional ``stable_within`` or ``decay_by``
    parameters; ``None`` when neither is set.'''
    within = params.number('stable_within', None)
    if within is not None:
        return {'stable_within': within, 'spread': trend.spread,
                'met': bool(trend.spread <= within)}
    factor = params.number('decay_by', None)
    if factor is not None:
        return {'decay_by': factor, 'decay': trend.decay, 'met': bool(trend.decay >= factor)}
    return None


def target_note(target):
    if target is None:
        return ''
    return '; target met' if target['met'] else '; target missed'
