from django.apps import AppConfig


class HedonicConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hedonic'
    verbose_name = 'Hedonic game dynamics'
