'''
Runs the command named by ``[run] command`` of a configuration file.
'''
from django.core.management import call_command
from django.core.management.base import CommandError

from gaussampling.cli.base import ExperimentCommand
from gaussampling.cli.runconfig import load_run_config
from gaussampling.loggers import error_log
from gaussampling.utils.error_codes import exit_code_for
from gaussampling.utils.exceptions import ConfigError, GaussSamplingError

COMMANDS = ('annihilator', 'density', 'experiments', 'frame_trend', 'gabor_sweep',
            'gabor_trend', 'lattice', 'lift', 'norms', 'reconstruct', 'theta',
            'trajectory_annihilate', 'trajectory_trend')


class Command(ExperimentCommand):
    help = 'Dispatches a run configuration to the command it names.'
    explanation = 'Reads [run] command and runs that command on the same configuration.'

    reference = 'The reference of the command named by [run] command.'

    def handle(self, *args, **options):
        if options.get('explain'):
            self.stdout.write(self.explain_text())
            return
        try:
            if not options.get('config'):
                raise ConfigError("run needs --config")
            name = load_run_config(options['config']).command
            if name not in COMMANDS:
                raise ConfigError("unknown command %r; expected one of %s"
                                  % (name, ', '.join(COMMANDS)), 1, 1)
        except GaussSamplingError as exc:
            code = exit_code_for(exc)
            error_log.error("run exited with %d: %s", code, exc)
            raise CommandError('%s: %s' % (type(exc).__name__, exc), returncode=code)
        call_command(name, config=options['config'], out=options.get('out'),
                     seed=options.get('seed'), threads=options.get('threads'),
                     assignments=options.get('assignments') or [], stdout=self.stdout)
