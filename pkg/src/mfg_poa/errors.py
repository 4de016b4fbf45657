"""Exception types shared across the package."""


class ModelJSONError(ValueError):
    """Model JSON is malformed, or keys are missing/unexpected."""


class ZeroDenominator(ValueError):
    """A gain-coefficient denominator vanishes; the model is degenerate."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"denominator {name} is zero")


class InvalidModel(ValueError):
    """Parameters fail the existence/uniqueness inequalities required by a solver."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("model violates: " + "; ".join(self.violations))


class IllPosed(ValueError):
    """Riccati sign conditions fail; no globally defined solution is guaranteed."""


class OutOfDomain(ValueError):
    """A time argument lies outside [0, T]."""


class BadGrid(ValueError):
    """A quadrature/time grid does not have an odd point count >= 3."""


class DegenerateCost(ArithmeticError):
    """Planner social cost is not strictly positive; the cost ratio is undefined."""


class Blowup(ArithmeticError):
    """Numerical ODE integration escaped to very large magnitude."""


class IncompatibleGrid(ValueError):
    """Trajectories/policies were built on a grid that does not match the request."""


class UnknownParameter(KeyError):
    """Sweep parameter name does not match any model field."""


class InsufficientTail(ValueError):
    """A sweep does not extend far enough to judge the limiting behavior."""
