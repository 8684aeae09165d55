"""Pass/fail reports returned by the verification routines."""


class Report:
    def __init__(self, name, failures=None, checked=0):
        self.name = name
        self.failures = list(failures or [])
        self.checked = checked

    @property
    def ok(self):
        return not self.failures

    def fail(self, msg):
        self.failures.append(msg)

    def merge(self, other):
        self.failures.extend(other.failures)
        self.checked += other.checked
        return self

    def __bool__(self):
        return self.ok

    def __str__(self):
        head = "%s: %s (%d checks)" % (self.name, "PASS" if self.ok else "FAIL", self.checked)
        return "\n".join([head] + ["  " + f for f in self.failures])

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "checked": self.checked, "failures": self.failures}
