from django.apps import AppConfig


class BlochConfig(AppConfig):
    name = 'bloch'
    verbose_name = 'Сфера Блоха'
