from django.apps import AppConfig


class CliConfig(AppConfig):
    name = 'gaussampling.cli'
    label = 'cli'
    verbose_name = 'Sampling diagnostics'
