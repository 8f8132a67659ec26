from django.apps import AppConfig


class LorentzWeierstrassAppConfig(AppConfig):
    label = "lorentz_weierstrass"
    name = "lorentz_weierstrass"
    verbose_name = "Lorentz Weierstrass minimal surfaces"

    def ready(self):
        from lorentz_weierstrass.gallery import load_extra_families

        load_extra_families()
