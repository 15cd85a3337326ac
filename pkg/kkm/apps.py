from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class KKMConfig(AppConfig):
    name = "kkm"
    verbose_name = _("KKM and Sperner verifiers")
    default_auto_field = "django.db.models.AutoField"
