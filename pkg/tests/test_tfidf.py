import math

import pytest

from storytutor.errors import EmptyCorpus
from storytutor.estimator import SparseVector, VocabularyConfig, build_vocabulary, tfidf_transform

# 3-document hand corpus used throughout; document frequencies:
# login=2, page=2, button=1, error=1
CORPUS = ["login page login", "login button", "page error"]


def hand_idf(df, n_docs=3):
    return math.log((1 + n_docs) / (1 + df)) + 1.0


class TestBuildVocabulary:
    def test_empty_corpus_rejected(self):
        with pytest.raises(EmptyCorpus):
            build_vocabulary([])

    def test_single_doc_smoothing_identity(self):
        vocab = build_vocabulary(["login"])
        assert vocab.idf[vocab.term_to_index["login"]] == pytest.approx(1.0, abs=1e-12)

    def test_hand_idf_values(self):
        vocab = build_vocabulary(CORPUS)
        assert vocab.idf[vocab.term_to_index["login"]] == pytest.approx(hand_idf(2), abs=1e-9)
        assert vocab.idf[vocab.term_to_index["page"]] == pytest.approx(hand_idf(2), abs=1e-9)
        assert vocab.idf[vocab.term_to_index["button"]] == pytest.approx(hand_idf(1), abs=1e-9)
        assert vocab.idf[vocab.term_to_index["error"]] == pytest.approx(hand_idf(1), abs=1e-9)

    def test_indexes_dense_no_gaps(self):
        vocab = build_vocabulary(CORPUS)
        assert sorted(vocab.term_to_index.values()) == list(range(len(vocab)))

    def test_all_idf_positive(self):
        vocab = build_vocabulary(CORPUS + ["login login login"])
        assert all(w > 0 for w in vocab.idf)

    def test_min_df_filter(self):
        vocab = build_vocabulary(CORPUS, VocabularyConfig(min_document_frequency=2))
        assert set(vocab.term_to_index) == {"login", "page"}

    def test_max_size_keeps_most_frequent(self):
        vocab = build_vocabulary(CORPUS, VocabularyConfig(max_vocabulary_size=2))
        assert set(vocab.term_to_index) == {"login", "page"}


class TestTfidfTransform:
    def test_single_term_is_unit_vector(self):
        vocab = build_vocabulary(CORPUS)
        vec = tfidf_transform("button", vocab)
        assert vec.indexes == (vocab.term_to_index["button"],)
        assert vec.values[0] == pytest.approx(1.0, abs=1e-12)

    def test_all_oov_is_zero_vector(self):
        vocab = build_vocabulary(CORPUS)
        assert tfidf_transform("qwerty zxcvb", vocab) == SparseVector((), ())

    def test_hand_oracle_vector(self):
        vocab = build_vocabulary(CORPUS)
        vec = tfidf_transform("login page login", vocab)
        w_login = 2 * hand_idf(2)
        w_page = 1 * hand_idf(2)
        norm = math.sqrt(w_login**2 + w_page**2)
        expected = {
            vocab.term_to_index["login"]: w_login / norm,
            vocab.term_to_index["page"]: w_page / norm,
        }
        assert set(vec.indexes) == set(expected)
        for idx, val in zip(vec.indexes, vec.values):
            assert val == pytest.approx(expected[idx], abs=1e-9)

    def test_l2_norm_is_one(self):
        vocab = build_vocabulary(CORPUS)
        for text in CORPUS + ["login error button page"]:
            vec = tfidf_transform(text, vocab)
            norm = math.sqrt(sum(v * v for v in vec.values))
            assert norm == pytest.approx(1.0, abs=1e-9)

    def test_indexes_strictly_increasing(self):
        vocab = build_vocabulary(CORPUS)
        vec = tfidf_transform("error login page button", vocab)
        assert all(b > a for a, b in zip(vec.indexes, vec.indexes[1:]))
