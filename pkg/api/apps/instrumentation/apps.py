from django.apps import AppConfig


class InstrumentationConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "api.apps.instrumentation"
