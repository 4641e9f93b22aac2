"""Shared fixtures: the news-table corpus from the source figure and
random corpus builders whose token content is known exactly."""

from __future__ import annotations

import random

import pytest

from newssearch.corpus_store import Corpus, Document

# (id, label, title) rows of the reference news table; articles below are
# short bodies written so that "covid" appears in exactly the documents the
# classified-search examples expect (13, 19, 22, 32, 33).
FIG1_ROWS = [
    (11, "London", "Sarah Everard disappearance: Met officer arrested", "A serving Met police officer has been arrested."),
    (12, "London", "Sarah Everard: Human remains found in Kent woodland", "Human remains have been found in the woodland."),
    (13, "Scotland", "Rules on people meeting outdoors", "Up to four adults from two households can meet outdoors under new covid rules."),
    (14, "UK Politics", "As it happened - PM challenged on NHS pay", "Amid the blizzard of figures from the podium."),
    (15, "UK Politics", "Act now on LGBT+ conversion therapy, ministers say", "Campaigners have urged the government to act."),
    (16, "Business", "Heathrow says airport border queues at unacceptable levels", "The airport regularly sees queues of hours."),
    (17, "UK", "Sellafield nuclear site a toxic mix of bullying", "A toxic culture of bullying and harassment."),
    (18, "Newsbeat", "Breonna Taylor's boyfriend Kenneth Walker cleared", "Kenneth Walker said he thought an intruder broke in."),
    (19, "Wales", "Covid: Stay-local rules likely to differ across Wales", "Any stay-local policy introduced as lockdown eases."),
    (20, "Australia", "Richard Pusey: Australian admits filming taunts", "An Australian man has pleaded guilty to filming."),
    (21, "London", "Sarah Everard: Block of flats cordoned off in search", "Officers searching for a missing woman in Brixton."),
    (22, "Scotland", "Covid in Scotland: FM quizzed on lockdown easing", "We kid ourselves if we think restrictions are over."),
    (23, "UK", "Meghan racism row: Society of Editors boss steps down", "The executive director of an industry body resigned."),
    (24, "Asia", "Myanmar coup: We were told to shoot protesters", "Officers say they were ordered to shoot protesters."),
    (25, "Liverpool", "Everton goalkeeper Robin Olsen and family in raid", "The goalkeeper and his family were robbed at home."),
    (26, "Wales", "Stalking protection orders: Police not using new powers", "New protective orders are going unused."),
    (27, "UK Politics", "Air passenger duty: Review planned to cut tax", "The PM has said he wants to cut air passenger duty."),
    (28, "UK Politics", "Boris Johnson accused of lying to MPs over Labour", "Labour has accused the PM of lying to MPs."),
    (29, "Wales", "Rhondda: Man, 31, charged with murder of girl, 16", "Wenjing Lin died at the Blue Sky Chinese takeaway."),
    (30, "Business", "Lego plans listing agree for digital growth drive", "The chief executive's favourite set is the bulldozer."),
    (31, "Wiltshire", "Salisbury Novichok poisoning house to be bought", "The house at the centre of the poisoning case."),
    (32, "Scotland", "Covid in Scotland: Sturgeon objective to eliminate virus", "The First Minister has said Scotland aims to eliminate the virus."),
    (33, "UK Politics", "Covid-19: UK has not banned export of vaccines", "The PM corrected claims about vaccine exports."),
    (34, "London", "Sarah Everard disappearance: House and woods searched", "Police investigating the disappearance searched woods in Kent."),
    (35, "UK", "Meghan and Harry interview: Palace taking race issue seriously", "The race issues raised will be addressed privately."),
    (36, "London", "Sarah Everard: Police confirm last sighting of missing woman", "The last confirmed sighting was on a doorbell camera."),
    (37, "UK Politics", "SNP chief whip steps aside following harassment claim", "Patrick Grady became his party's chief whip in 2017."),
    (38, "UK", "Census 2021: Judge orders change to sex question guidance", "As well as legal sex, the census asks about identity."),
    (39, "London", "Sarah Everard: Family desperate to see missing woman", "Detectives have asked people in the area for footage."),
    (40, "Business", "Right to repair law to come in this summer", "New rules will make appliances easier to fix."),
]


def make_doc(doc_id: int, label: str = "UK", title: str = "title", article: str = "",
             url: str | None = None, dt: str = "2021-03-10") -> Document:
    return Document(
        id=doc_id,
        label=label,
        url=url or f"http://www.bbc.co.uk/news/{doc_id}",
        title=title,
        dt=dt,
        article=article,
    )


@pytest.fixture
def fig1_corpus() -> Corpus:
    return Corpus(
        make_doc(doc_id, label, title, article) for doc_id, label, title, article in FIG1_ROWS
    )


def random_token_corpus(
    rng: random.Random,
    n_docs: int,
    vocab_size: int,
    max_len: int = 30,
    labels: tuple[str, ...] = ("sport", "business", "politics"),
) -> tuple[Corpus, dict[int, list[str]]]:
    """Corpus whose articles are space-joined clean tokens.

    The tokens are already pipeline-normal (lowercase, alphanumeric, not
    stopwords), so the exact indexed token list of every document is known
    and usable as an oracle. Titles are empty-field free but carry no vocab
    terms, so indexing title+article equals indexing the article tokens
    plus the constant title token.
    """
    vocab = [f"w{i:03d}" for i in range(vocab_size)]
    docs = []
    token_lists: dict[int, list[str]] = {}
    doc_id = 0
    for _ in range(n_docs):
        doc_id += rng.randint(1, 3)  # ids need not be contiguous
        tokens = [rng.choice(vocab) for _ in range(rng.randint(1, max_len))]
        docs.append(
            make_doc(
                doc_id,
                label=rng.choice(labels),
                title=f"doc{doc_id}",
                article=" ".join(tokens),
            )
        )
        token_lists[doc_id] = [f"doc{doc_id}"] + tokens
    return Corpus(docs), token_lists
