"""Tests for the singleton decorator."""

from asdbench.config.decorators import singleton


class TestSingleton:
    """Test suite for singleton."""

    def test_first_call_wins(self):
        """Test later calls return the first instance and ignore their arguments."""

        @singleton
        class Registry:
            def __init__(self, value: int):
                self.value = value

        first = Registry(10)

        assert Registry(20) is first
        assert first.value == 10

    def test_state_is_shared(self):
        """Test mutations are visible through every call."""

        @singleton
        class Tally:
            def __init__(self):
                self.seen: list[str] = []

        Tally().seen.append("NB")
        Tally().seen.append("kNN")

        assert Tally().seen == ["NB", "kNN"]

    def test_keyword_only_arguments(self):
        """Test keyword arguments reach the first construction only."""

        @singleton
        class Options:
            def __init__(self, *, verbose: bool = False):
                self.verbose = verbose

        assert Options(verbose=True) is Options(verbose=False)
        assert Options().verbose is True

    def test_reset(self):
        """Test reset makes the next call build a new instance."""

        @singleton
        class Holder:
            def __init__(self, seed: int = 0):
                self.seed = seed

        before = Holder(1)
        Holder.reset()
        after = Holder(2)

        assert before is not after
        assert after.seed == 2

    def test_metadata_is_kept(self):
        """Test the factory keeps the class name and docstring."""

        @singleton
        class Named:
            """Doc."""

        assert Named.__name__ == "Named"
        assert Named.__doc__ == "Doc."
