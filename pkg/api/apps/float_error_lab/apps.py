from django.apps import AppConfig


class FloatErrorLabConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "api.apps.float_error_lab"
