#pylint: disable-all

'''Tests for run configurations and the management commands.'''
import csv
import io
import os
import shutil
import tempfile

import simplejson

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from django.test.utils import override_settings

from gaussampling.cli.experiments import list_experiments
from gaussampling.cli.management.commands.run import COMMANDS
from gaussampling.cli.runconfig import empty_run_config, load_run_config, parse_run_config
from gaussampling.point_sets.descriptors import Progression
from gaussampling.utils.error_codes import EXIT_CONFIG_ERROR, EXIT_OPERATION_ERROR
from gaussampling.utils.exceptions import ConfigError

DENSITY_CONFIG = '''\
[run]
command = density
seed = 3

[density]
set = prog 0.9 0
radii = 25 50
'''


class RunConfigTest(SimpleTestCase):

    def test_parses_run_and_parameters(self):
        config = parse_run_config(DENSITY_CONFIG)
        self.assertEqual(config.command, 'density')
        self.assertEqual(config.seed, 3)
        self.assertEqual(config.out, '.')
        self.assertEqual(config.params.numbers('radii'), [25.0, 50.0])
        self.assertEqual(config.params.descriptor('set'), Progression(0.9, 0.0))

    def test_hyphenated_command_selects_its_section(self):
        config = parse_run_config('[run]\ncommand = frame-trend\n\n[frame-trend]\na = pi\n')
        self.assertEqual(config.command, 'frame_trend')
        self.assertAlmostEqual(config.params.number('a'), 3.141592653589793, places=15)

    def test_defaults_for_missing_keys(self):
        params = parse_run_config(DENSITY_CONFIG).params
        self.assertEqual(params.integer('size', 20), 20)
        self.assertEqual(params.integers('sizes', [10, 20]), [10, 20])
        self.assertIsNone(params.number('epsilon', None))

    def test_missing_section_header(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_run_config('command = density\n')
        self.assertEqual((ctx.exception.line, ctx.exception.column), (1, 1))

    def test_line_without_delimiter(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_run_config('[run]\ncommand = density\nnot a pair\n')
        self.assertEqual(ctx.exception.line, 3)

    def test_duplicate_option(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_run_config('[run]\ncommand = density\ncommand = theta\n')
        self.assertEqual(ctx.exception.line, 3)

    def test_unknown_run_key(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_run_config('[run]\ncommand = density\ncolour = red\n')
        self.assertEqual((ctx.exception.line, ctx.exception.column), (3, 1))

    def test_missing_command(self):
        with self.assertRaisesRegex(ConfigError, 'no command given'):
            parse_run_config('[run]\nseed = 1\n')

    def test_bad_number_names_key_and_line(self):
        config = parse_run_config(DENSITY_CONFIG.replace('25 50', '25 fifty'))
        with self.assertRaisesRegex(ConfigError, r'line 7, column 1: \[density\] radii'):
            config.params.numbers('radii')

    def test_bad_descriptor_names_key_and_line(self):
        config = parse_run_config(DENSITY_CONFIG.replace('prog 0.9 0', 'prog 0.9 0 1 2'))
        with self.assertRaisesRegex(ConfigError, r'line 6, column 1: \[density\] set'):
            config.params.descriptor('set')

    def test_missing_parameter(self):
        with self.assertRaisesRegex(ConfigError, 'a: missing'):
            parse_run_config(DENSITY_CONFIG).params.number('a')

    def test_wrong_count(self):
        config = parse_run_config('[run]\ncommand = theta\n[theta]\nwindow = -3 0 3\n')
        with self.assertRaisesRegex(ConfigError, 'expected 2 numbers, got 3'):
            config.params.numbers('window', count=2)

    def test_overrides(self):
        config = parse_run_config(DENSITY_CONFIG).with_overrides(
            out='elsewhere', seed=11, threads=4, assignments=['set=prog 2 0.5', 'extra = 1'])
        self.assertEqual((config.out, config.seed, config.threads), ('elsewhere', 11, 4))
        self.assertEqual(config.params.descriptor('set'), Progression(2.0, 0.5))
        self.assertEqual(config.params.integer('extra'), 1)

    def test_malformed_assignment(self):
        with self.assertRaisesRegex(ConfigError, 'expects key=value'):
            empty_run_config('density').with_overrides(assignments=['set'])

    def test_missing_file(self):
        with self.assertRaisesRegex(ConfigError, 'does not exist'):
            load_run_config('/nonexistent/run.ini')


class CommandTestBase(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.tmp)

    def call(self, name, out=None, **options):
        stdout = io.StringIO()
        call_command(name, out=out or self.tmp, stdout=stdout, **options)
        return stdout.getvalue()

    def write_config(self, text, name='run.ini'):
        path = os.path.join(self.tmp, name)
        with open(path, 'w', encoding='utf-8') as fio:
            fio.write(text)
        return path

    def read(self, name, directory=None):
        with open(os.path.join(directory or self.tmp, name), encoding='utf-8') as fio:
            return fio.read()

    def report(self, name):
        return simplejson.loads(self.read(name))


class DensityCommandTest(CommandTestBase):

    def test_progression_density_is_exact(self):
        output = self.call('density', config=self.write_config(DENSITY_CONFIG))
        report = self.report('density.json')
        self.assertAlmostEqual(report['lower'], 1 / 0.9, places=12)
        self.assertAlmostEqual(report['upper'], 1 / 0.9, places=12)
        self.assertTrue(report['exact'])
        self.assertAlmostEqual(report['separation'], 0.9, places=15)
        rows = list(csv.reader(io.StringIO(self.read('density.csv'))))
        self.assertEqual(rows[0], ['kind', 'R', 'lower', 'upper', 'exact'])
        self.assertEqual(rows[-1][0], 'limit')
        self.assertEqual(rows[-1][-1], 'true')
        self.assertEqual(len(rows), 4)
        self.assertIn('density.json', output)
        self.assertIn('(exact)', output)

    def test_set_overrides_the_file(self):
        self.call('density', config=self.write_config(DENSITY_CONFIG),
                  assignments=['set=prog 0.5 0'])
        self.assertAlmostEqual(self.report('density.json')['lower'], 2.0, places=12)

    def test_reruns_are_byte_identical(self):
        path = self.write_config(DENSITY_CONFIG)
        first, second = os.path.join(self.tmp, 'first'), os.path.join(self.tmp, 'second')
        self.call('density', out=first, config=path)
        self.call('density', out=second, config=path)
        for name in ('density.csv', 'density.json'):
            self.assertEqual(self.read(name, first), self.read(name, second))

    def test_empty_set_has_no_separation(self):
        self.call('density', assignments=['set=empty', 'radii=10'])
        report = self.report('density.json')
        self.assertIsNone(report['separation'])
        self.assertEqual(report['upper'], 0.0)


class ExitCodeTest(CommandTestBase):

    def test_explain_prints_the_statement(self):
        output = self.call('annihilator', explain=True)
        self.assertIn('Laurent coefficients', output)
        self.assertIn('Reference: Nonzero functions of V_a vanishing', output)
        self.assertEqual(os.listdir(self.tmp), [])

    def test_every_command_cites_its_result(self):
        for name in COMMANDS + ('run',):
            output = self.call(name, explain=True)
            lines = output.strip().splitlines()
            self.assertTrue(lines[-1].startswith('Reference: '), name)
            self.assertTrue(len(lines[-1]) > len('Reference: ') + 10, name)

    def test_config_error_exits_with_two(self):
        path = self.write_config(DENSITY_CONFIG.replace('prog 0.9 0', 'prog 0.9 0 1 2'))
        with self.assertRaises(CommandError) as ctx:
            self.call('density', config=path)
        self.assertEqual(ctx.exception.returncode, EXIT_CONFIG_ERROR)

    def test_missing_parameter_exits_with_two(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('annihilator', assignments=['a=1'])
        self.assertEqual(ctx.exception.returncode, EXIT_CONFIG_ERROR)

    def test_operation_error_exits_with_one(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('annihilator', assignments=['target=prog 0.5 0', 'a=1'])
        self.assertEqual(ctx.exception.returncode, EXIT_OPERATION_ERROR)
        self.assertIn('InfeasibleDensityError', str(ctx.exception))


class RunCommandTest(CommandTestBase):

    def test_dispatches_on_the_run_command(self):
        self.call('run', config=self.write_config(DENSITY_CONFIG))
        self.assertTrue(self.report('density.json')['exact'])

    def test_unknown_command(self):
        path = self.write_config('[run]\ncommand = plot\n')
        with self.assertRaises(CommandError) as ctx:
            self.call('run', config=path)
        self.assertEqual(ctx.exception.returncode, EXIT_CONFIG_ERROR)

    def test_needs_a_config(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('run')
        self.assertEqual(ctx.exception.returncode, EXIT_CONFIG_ERROR)


class ExperimentsCommandTest(CommandTestBase):

    def test_manifest_lists_every_run(self):
        output = self.call('experiments')
        rows = list(csv.reader(io.StringIO(self.read('experiments.csv'))))
        self.assertEqual(len(rows), 11)
        self.assertEqual([int(row[0]) for row in rows[1:]], list(range(1, 11)))
        self.assertIn('frame_trend --set', output)

    def test_manifest_commands_exist(self):
        for experiment in list_experiments():
            for run in experiment.runs:
                self.assertIn(run.command.replace('-', '_'), COMMANDS)


class NumericalCommandTest(CommandTestBase):

    def test_theta_zeros(self):
        self.call('theta', assignments=['a=pi', 'window=-3 3'])
        report = self.report('theta.json')
        self.assertLess(report['zero_residual'], 1e-10)
        self.assertEqual(len(self.read('theta.csv').splitlines()), 7)

    def test_annihilator_artifacts(self):
        self.call('annihilator', assignments=['target=prog 2 0.3', 'a=1', 'epsilon=0.25'])
        report = self.report('annihilator.json')
        self.assertLess(report['residual'], 1e-8)
        self.assertEqual(report['k_range'], [-12, 12])
        self.assertTrue(self.read('annihilator.txt').startswith('1 1.0 1.0 '))
        self.assertEqual(len(self.read('annihilator.csv').splitlines()), 26)

    def test_annihilator_missing_tolerance_exits_with_one(self):
        with override_settings(ANNIHILATOR_RESIDUAL_TOL=1e-300):
            with self.assertRaises(CommandError) as ctx:
                self.call('annihilator', assignments=['target=prog 2 0.3', 'a=1',
                                                      'epsilon=0.25'])
        self.assertEqual(ctx.exception.returncode, EXIT_OPERATION_ERROR)
        self.assertIn('AccuracyError', str(ctx.exception))
        self.assertTrue(self.report('annihilator.json')['failed'])

    def test_frame_trend_of_integers(self):
        self.call('frame_trend', assignments=['set=prog 1 0', 'a=pi', 'sizes=10 20 30'])
        report = self.report('frame_trend.json')
        self.assertLess(report['spread'], 2.0)
        rows = list(csv.reader(io.StringIO(self.read('frame_trend.csv'))))
        self.assertEqual(rows[0], ['N', 'A_est', 'B_est', 'ratio_prev'])
        self.assertEqual([row[0] for row in rows[1:]], ['10', '20', '30'])
        self.assertEqual(rows[1][3], 'nan')

    def test_reconstruct_without_noise(self):
        coeffs = self.write_config('1 1.0 1.0 2.0\n-1 0.5 0.0\n0 1.0 0.0\n1 -0.25 0.0\n',
                                   'truth.txt')
        self.call('reconstruct', assignments=['coeffs=%s' % coeffs, 'set=prog 0.5 0',
                                              'size=10'])
        report = self.report('reconstruct.json')
        self.assertLess(report['coefficient_error'], 1e-8)
        self.assertEqual(report['rank'], 11)

    def test_reconstruct_missing_file(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('reconstruct', assignments=['coeffs=absent.txt', 'set=prog 1 0'])
        self.assertEqual(ctx.exception.returncode, EXIT_CONFIG_ERROR)

    def test_lattice_regime(self):
        self.call('lattice', assignments=['p=1', 'q=1', 'gamma1=prog 0.9 0',
                                          'gamma2=prog 0.9 0', 'window=-3 3'])
        report = self.report('lattice.json')
        self.assertEqual(report['regime'], 'sufficient')
        self.assertEqual(report['count'], len(self.read('lattice.csv').splitlines()) - 1)

    def test_norms(self):
        self.call('norms', seed=5, assignments=['draws=5'])
        report = self.report('norms.json')
        self.assertLess(report['max_line_error'], 1e-6)
        self.assertLess(report['spread'], 10.0)

    def test_gabor_sweep_artifacts(self):
        self.call('gabor_sweep', assignments=['p=1', 'q=1', 'c=0.9', 'd=0.9', 'size=10',
                                              'step=0.25'])
        rows = list(csv.reader(io.StringIO(self.read('gabor_sweep.csv'))))
        self.assertEqual(rows[0], ['u', 'v', 'A_est', 'kind'])
        self.assertEqual(len(rows), 27)
        self.assertEqual(rows[-1][-1], 'min')
        self.assertEqual(len(self.read('gabor_generators.txt').splitlines()), 4)
        report = self.report('gabor_sweep.json')
        self.assertTrue(report['conditions']['sufficient'])
        self.assertTrue(report['summary'].startswith('no failing translate found at step 0.25'))

    def test_trajectory_annihilator_lift(self):
        self.call('trajectory_annihilate', assignments=['p=1', 'q=1', 'offsets=prog 2 0',
                                                        'a=1'])
        report = self.report('trajectory_annihilate.json')
        self.assertLess(report['lift_error'], 1e-8)
        self.assertLess(report['trajectory_residual'], 1e-6)

    def test_seeded_lift_check(self):
        self.call('lift', seed=3)
        report = self.report('lift.json')
        self.assertEqual((report['p'], report['q'], report['draws']), (1, 2, 20))
        self.assertLessEqual(report['max_abs_error'], 1e-8)
        self.assertTrue(report['met'])
        first = self.read('lift.csv')
        self.assertEqual(len(first.splitlines()), 21)
        self.call('lift', seed=3)
        self.assertEqual(self.read('lift.csv'), first)

    def test_trend_target_is_reported(self):
        output = self.call('trajectory_trend', assignments=['p=1', 'q=1', 'offsets=prog 4 0',
                                                            'a=1', 'sizes=10 20 30',
                                                            'stable_within=0.5'])
        target = self.report('trajectory_trend.json')['target']
        self.assertEqual(target['stable_within'], 0.5)
        self.assertFalse(target['met'])
        self.assertIn('target missed', output)
