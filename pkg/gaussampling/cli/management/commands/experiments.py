'''
Lists the acceptance runs with the parameters that reproduce them.
'''
import shlex

from gaussampling.cli.base import ExperimentCommand
from gaussampling.cli.experiments import list_experiments


def run_line(run):
    options = ' '.join('--set %s' % shlex.quote('%s=%s' % item)
                       for item in sorted(run.params.items()))
    return '%s %s' % (run.command.replace('-', '_'), options)


class Command(ExperimentCommand):
    help = 'Prints the manifest of acceptance runs and writes it as CSV.'
    explanation = ('Each entry names a run, the commands and parameters reproducing it, '
                   'the outcome to expect and the statement it illustrates.')

    reference = 'The claim column of each entry.'

    def run(self, config, artifacts):
        experiments = list_experiments()
        rows = []
        for experiment in experiments:
            commands = ' ; '.join(run_line(run) for run in experiment.runs)
            rows.append((experiment.number, experiment.name, commands, experiment.expected,
                         experiment.claim))
            self.stdout.write('%2d %s: %s' % (experiment.number, experiment.name, commands))
        artifacts.csv('experiments.csv', ('number', 'name', 'commands', 'expected', 'claim'), rows)
        return '%d experiments' % len(experiments)
