from ..integrator import SIMO_PERIOD
from .setup import RunConfig


class DefaultRunConfig(RunConfig):
    def __init__(self, **params: object) -> None:
        """Initialises a ``RunConfig`` for the twelfth ``T = 2π/12``.

        Keyword arguments override the default parameters.
        """
        config = dict(
            name="Default run",
            description="Minimizer for T = 2 pi / 12 and the published orbit.",
            run=dict(params),
        )
        super().__init__(config)
        return


class SimoRunConfig(RunConfig):
    def __init__(self, **params: object) -> None:
        """Initialises a ``RunConfig`` whose twelfth matches the published
        period ``6.32591398``, so that the minimizer and the integrated orbit
        need no rescaling.
        """
        run = dict(period=SIMO_PERIOD / 12, t_end=SIMO_PERIOD)
        run.update(params)
        config = dict(
            name="Published period run",
            description="Minimizer for the published period.",
            run=run,
        )
        super().__init__(config)
        return
