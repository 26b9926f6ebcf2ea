from django.apps import AppConfig


class ModinvCoreConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "api.apps.modinv_core"
