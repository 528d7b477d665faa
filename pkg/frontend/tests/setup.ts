// React rejects act() unless the environment declares itself test-aware.
(globalThis as Record<string, unknown>).IS_REACT_ACT_ENVIRONMENT = true;
