from defects.corpus import battery, corpus_files
import logging


def main():
    logging.basicConfig(level=logging.CRITICAL)
    failures = battery(corpus_files('sample_data'))
    print('\n'.join(str(f) for f in failures))
    print(f'\nGot {len(failures)} failures during checking')


if __name__ == '__main__':
    main()
