"""Even/odd Gram-index sums of Psi against their main terms, for both Psi models."""
import argparse

from xieq.gram_sums import asymptotic_check


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--T", type=float, nargs="+", default=[1e4, 1e5, 1e6])
    p.add_argument("--epsilon", type=float, default=0.3)
    p.add_argument("--psi", choices=("gram", "quad"), nargs="+", default=["gram", "quad"])
    a = p.parse_args(argv)

    print("T,psi,parity,count,total,main_term,ratio")
    for T in a.T:
        for model in a.psi:
            for s in asymptotic_check(T, a.epsilon, model):
                print(f"{T:g},{model},{s.parity},{s.count},{s.total:.6g},{s.main_term:.6g},{s.ratio:.4f}")


if __name__ == "__main__":
    main()
