from yokonuma.tasks.verify import verify

# Call the verify entry point directly from inside the package
# You can also pass additional Hydra arguments, like:
# `python run.py command=cellular algebra.r=2 algebra.n=3 algebra.d=2`
# or reproduce the worked example with `python run.py experiment=worked_example`
if __name__ == "__main__":
    verify()
