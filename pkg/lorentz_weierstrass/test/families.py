from lorentz_weierstrass.algebra.grid import Rectangle
from lorentz_weierstrass.gallery import ExampleFamily


class HalfEnneper(ExampleFamily):
    """g = z / 2: the spacelike Enneper surface in another Liouville parameter."""

    name = "half_enneper"
    eps = 1
    verbose_name = "Enneper surface with g = z / 2"

    def developing_map(self, params):
        return (lambda z: z * 0.5), (lambda z: z * 0.0 + 0.5)

    def raw_domain(self, params):
        return Rectangle(-0.6, 0.6, -0.6, 0.6)
